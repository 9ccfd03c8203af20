#include "hermitian/symmetric.hpp"

#include <algorithm>
#include <sstream>

namespace hermitian {

namespace {

Monomial unit(const VarLayout &l) { return Monomial(l.nvars(), 0); }

/* p *= (1 + sign * m) */
void times_binomial(Poly &p, const Monomial &m, int sign)
{
    Poly f = Poly::constant(p.layout(), p.cap(), 1);
    f.add_term(m, sign);
    p = p * f;
}

void multiply_factors(Poly &p, ProductKind kind)
{
    const VarLayout &l = p.layout();
    auto pair = [&](int i, int j, int sign, bool with_t) {
        Monomial m = unit(l);
        m[i]++;
        m[j]++;
        if (with_t)
            m[l.t_index()] = 1;
        times_binomial(p, m, sign);
    };
    switch (kind) {
    case ProductKind::CauchyPlus:
    case ProductKind::CauchyMinus:
        for (int i = 0; i < l.nx; i++)
            for (int j = 0; j < l.ny; j++)
                pair(i, l.nx + j, kind == ProductKind::CauchyPlus ? 1 : -1, false);
        break;
    case ProductKind::SymMinus:
    case ProductKind::AltMinus:
    case ProductKind::SymGraded:
    case ProductKind::AltGraded: {
        bool diag = kind == ProductKind::SymMinus || kind == ProductKind::SymGraded;
        bool graded = kind == ProductKind::SymGraded || kind == ProductKind::AltGraded;
        require(!graded || l.t, "graded product needs the t variable");
        for (int i = 0; i < l.nx; i++)
            for (int j = diag ? i : i + 1; j < l.nx; j++)
                pair(i, j, graded ? 1 : -1, graded);
        break;
    }
    case ProductKind::LinearMinus:
    case ProductKind::LinearPlus:
        for (int i = 0; i < l.nx; i++) {
            Monomial m = unit(l);
            m[i] = 1;
            times_binomial(p, m, kind == ProductKind::LinearPlus ? 1 : -1);
        }
        break;
    }
}

std::vector<ProductKind> lhs_products(IdentityFamily f)
{
    using F = IdentityFamily;
    switch (f) {
    case F::DualCauchy: return {ProductKind::CauchyPlus};
    case F::GenI: return {ProductKind::CauchyMinus};
    case F::LittlewoodII:
    case F::GenII: return {ProductKind::SymMinus};
    case F::LittlewoodIII:
    case F::GenIIIa:
    case F::GenIIIb:
    case F::General: return {ProductKind::AltMinus};
    case F::LittlewoodIIIab: return {ProductKind::LinearMinus, ProductKind::AltMinus};
    case F::ReciprocalII: return {ProductKind::SymGraded};
    case F::ReciprocalIII: return {ProductKind::AltGraded};
    }
    return {};
}

int half_exact(int v, const Partition &pi)
{
    require(v % 2 == 0, "odd sign exponent for " + pi.to_string());
    return v / 2;
}

void check_sizes(const IdentityKind &kind, const IdentitySizes &s)
{
    using F = IdentityFamily;
    if (kind.family == F::DualCauchy || kind.family == F::GenI)
        require(s.p >= 1 && s.q >= 1, "identity needs p, q >= 1");
    else
        require(s.n >= 1, "identity needs n >= 1");
    require(kind.k >= 0 && kind.a >= 0 && kind.b >= 0, "identity parameters must be nonnegative");
    if (kind.family == F::General)
        require(kind.a + kind.b >= 1, "General identity needs a + b >= 1");
}

} // namespace

Poly expand_product(ProductKind kind, VarLayout layout, std::optional<int> cap)
{
    require(cap.has_value(), "expanding a product needs a degree cap");
    Poly p = Poly::constant(layout, cap, 1);
    multiply_factors(p, kind);
    return p;
}

std::string IdentityKind::to_string() const
{
    using F = IdentityFamily;
    switch (family) {
    case F::DualCauchy: return "DualCauchy";
    case F::LittlewoodII: return "LittlewoodII";
    case F::LittlewoodIII: return "LittlewoodIII";
    case F::LittlewoodIIIab: return "LittlewoodIIIab";
    case F::ReciprocalII: return "ReciprocalII";
    case F::ReciprocalIII: return "ReciprocalIII";
    case F::GenI: return "GenI(" + std::to_string(k) + ")";
    case F::GenII: return "GenII(" + std::to_string(k) + ")";
    case F::GenIIIa: return "GenIIIa(" + std::to_string(k) + ")";
    case F::GenIIIb: return "GenIIIb(" + std::to_string(k) + ")";
    case F::General: return "General(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
}

int ell_exponent(const Partition &pi, const IdentityKind &kind)
{
    using F = IdentityFamily;
    const int size = pi.size(), rk = pi.rank();
    auto need_asc = [&](int m) {
        require(asc_core(pi, m).has_value(),
                pi.to_string() + " is not of the form (alpha+" + std::to_string(m) + "|alpha)");
    };
    switch (kind.family) {
    case F::DualCauchy:
        return 0;
    case F::LittlewoodII:
    case F::LittlewoodIII:
    case F::ReciprocalII:
    case F::ReciprocalIII:
        need_asc(1);
        return size / 2;
    case F::LittlewoodIIIab:
        need_asc(0);
        return half_exact(size + rk, pi);
    case F::GenI: {
        Frobenius f = frobenius(pi);
        for (int a : f.arms)
            require(a >= kind.k, pi.to_string() + " has an arm shorter than k");
        return size - kind.k * rk;
    }
    case F::GenII:
        need_asc(2 * kind.k + 1);
        return half_exact(size - 2 * kind.k * rk, pi);
    case F::GenIIIa:
    case F::GenIIIb:
        need_asc(kind.k - 1);
        require((rk % 2 == 0) == (kind.family == F::GenIIIa),
                pi.to_string() + " has the wrong rank parity");
        return half_exact(size - kind.k * rk, pi);
    case F::General: {
        const int s = kind.a + kind.b;
        int v = size - 2 * s * (rk / 2) + (rk % 2 ? -kind.a : kind.a);
        return half_exact(v, pi);
    }
    }
    return 0;
}

VarLayout identity_layout(const IdentityKind &kind, const IdentitySizes &s)
{
    using F = IdentityFamily;
    switch (kind.family) {
    case F::DualCauchy:
    case F::GenI: return {s.p, s.q, false};
    case F::LittlewoodIII: return {s.n + 1, 0, false};
    case F::ReciprocalII:
    case F::ReciprocalIII: return {s.n, 0, true};
    default: return {s.n, 0, false};
    }
}

std::vector<Partition> identity_left_shapes(const IdentityKind &kind, const IdentitySizes &s)
{
    using F = IdentityFamily;
    switch (kind.family) {
    case F::GenI: return enumerate_shapes(ShapeFamily::box(std::min(s.p, s.q), kind.k));
    case F::GenII: return enumerate_shapes(ShapeFamily::even_rows(s.n, 2 * kind.k));
    case F::GenIIIa: return enumerate_shapes(ShapeFamily::even_columns(s.n, kind.k));
    case F::GenIIIb: return enumerate_shapes(ShapeFamily::odd_columns(s.n, kind.k));
    case F::General:
        return enumerate_shapes(ShapeFamily::mixed_columns(s.n, kind.a, kind.b));
    default: return {Partition()};
    }
}

namespace {

std::vector<Partition> general_index_shapes(const IdentityKind &kind, int n)
{
    const int a = kind.a, b = kind.b, s = a + b;
    if (a == 0)
        return enumerate_shapes(ShapeFamily::asc(n, s - 1, RankParity::Even));
    if (b == 0)
        return enumerate_shapes(ShapeFamily::asc(n, s - 1, RankParity::Odd));
    std::vector<Partition> out;
    for (auto &alpha : strict_subsets(1, n - 1)) {
        auto arms = add_constant(alpha, s - 1);
        auto legs = alpha;
        arms.push_back(alpha.size() % 2 == 0 ? a - 1 : b - 1);
        legs.push_back(0);
        out.push_back(from_frobenius(arms, legs));
    }
    sort_graded_revlex(out);
    return out;
}

} // namespace

std::vector<RhsTerm> identity_terms(const IdentityKind &kind, const IdentitySizes &s,
                                    const EllFunction &ell)
{
    using F = IdentityFamily;
    check_sizes(kind, s);
    std::vector<RhsTerm> out;
    auto push = [&](const Partition &index, Partition x, std::optional<Partition> y,
                    bool graded = false) {
        RhsTerm t;
        t.index = index;
        t.x_shape = std::move(x);
        t.y_shape = std::move(y);
        int e = ell(kind.family == F::GenI ? t.x_shape : index, kind);
        if (graded) {
            t.t_power = e;
            t.sign_alternates = false;
        } else {
            t.ell = e;
        }
        out.push_back(std::move(t));
    };
    switch (kind.family) {
    case F::DualCauchy:
        for (auto &pi : enumerate_shapes(ShapeFamily::box(s.p, s.q)))
            push(pi, pi, pi.conjugate());
        break;
    case F::GenI:
        for (auto &pi : enumerate_shapes(ShapeFamily::box(s.p, s.q)))
            push(pi, shift_frobenius(pi, kind.k, 0), shift_frobenius(pi.conjugate(), kind.k, 0));
        break;
    case F::LittlewoodII:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 1)))
            push(pi, pi, std::nullopt);
        break;
    case F::LittlewoodIII:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 1)))
            push(pi, pi.conjugate(), std::nullopt);
        break;
    case F::LittlewoodIIIab:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 0)))
            push(pi, pi, std::nullopt);
        break;
    case F::ReciprocalII:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 1)))
            push(pi, pi, std::nullopt, true);
        break;
    case F::ReciprocalIII:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 1)))
            push(pi, pi.conjugate(), std::nullopt, true);
        break;
    case F::GenII:
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, 2 * kind.k + 1)))
            push(pi, pi, std::nullopt);
        break;
    case F::GenIIIa:
    case F::GenIIIb: {
        auto parity = kind.family == F::GenIIIa ? RankParity::Even : RankParity::Odd;
        for (auto &pi : enumerate_shapes(ShapeFamily::asc(s.n, kind.k - 1, parity)))
            push(pi, pi, std::nullopt);
        break;
    }
    case F::General:
        for (auto &pi : general_index_shapes(kind, s.n))
            push(pi, pi, std::nullopt);
        break;
    }
    return out;
}

Poly identity_lhs(const IdentityKind &kind, const IdentitySizes &s, std::optional<int> cap)
{
    check_sizes(kind, s);
    VarLayout l = identity_layout(kind, s);
    Poly sum(l, cap);
    for (auto &nu : identity_left_shapes(kind, s)) {
        Poly term = schur(nu.parts(), l, cap, 0, l.nx);
        if (kind.family == IdentityFamily::GenI)
            term = term * schur(nu.parts(), l, cap, l.nx, l.ny);
        sum += term;
    }
    for (ProductKind pk : lhs_products(kind.family))
        multiply_factors(sum, pk);
    return sum;
}

Poly identity_rhs(const IdentityKind &kind, const IdentitySizes &s, std::optional<int> cap,
                  const std::vector<RhsTerm> &terms)
{
    VarLayout l = identity_layout(kind, s);
    Poly sum(l, cap);
    for (const RhsTerm &t : terms) {
        Poly term = schur(t.x_shape.parts(), l, cap, 0, l.nx);
        if (t.y_shape)
            term = term * schur(t.y_shape->parts(), l, cap, l.nx, l.ny);
        if (t.t_power)
            term = term.shifted(l.t_index(), t.t_power);
        term *= t.sign();
        sum += term;
    }
    return sum;
}

IdentityReport verify_identity(const IdentityKind &kind, const IdentitySizes &s, int cap,
                               const EllFunction &ell)
{
    using F = IdentityFamily;
    if (kind.family == F::GenIIIa || kind.family == F::GenIIIb)
        require(kind.k >= 1, "GenIIIa/GenIIIb need k >= 1; at k = 0 only their sum is an identity");
    require(cap >= 2, "degree cap must be at least 2");
    std::vector<RhsTerm> kept;
    for (auto &t : identity_terms(kind, s, ell)) {
        int deg = t.x_shape.size() + (t.y_shape ? t.y_shape->size() : 0) + 2 * t.t_power;
        if (deg <= cap)
            kept.push_back(std::move(t));
    }
    Poly lhs = identity_lhs(kind, s, cap);
    Poly rhs = identity_rhs(kind, s, cap, kept);
    Poly residual = lhs - rhs;
    return {kind, s, cap, residual.is_zero(), std::move(lhs), std::move(rhs), std::move(residual),
            std::move(kept)};
}

} // namespace hermitian
