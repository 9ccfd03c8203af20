#include "hermitian/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hermitian/error.hpp"

namespace hermitian {

Poly::Poly(VarLayout layout, std::optional<int> cap) : layout_(layout), cap_(cap)
{
    require(layout.nx >= 0 && layout.ny >= 0, "negative variable count");
    require(!cap || *cap >= 0, "degree cap must be nonnegative");
}

Poly Poly::constant(VarLayout layout, std::optional<int> cap, const mpz_class &c)
{
    Poly p(layout, cap);
    p.add_term(Monomial(layout.nvars(), 0), c);
    return p;
}

Poly Poly::variable(VarLayout layout, std::optional<int> cap, int var)
{
    Poly p(layout, cap);
    Monomial m(layout.nvars(), 0);
    m.at(var) = 1;
    p.add_term(m, 1);
    return p;
}

int Poly::degree(const Monomial &m) const
{
    int d = 0;
    for (int i = 0; i < static_cast<int>(m.size()); i++)
        d += (layout_.t && i == layout_.t_index()) ? 2 * m[i] : m[i];
    return d;
}

void Poly::add_term(const Monomial &m, const mpz_class &c)
{
    if (c == 0 || (cap_ && degree(m) > *cap_))
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly &Poly::operator+=(const Poly &o)
{
    require(layout_ == o.layout_, "adding polynomials in different rings");
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    require(layout_ == o.layout_, "subtracting polynomials in different rings");
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly &Poly::operator*=(const mpz_class &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_)
        kv.second *= c;
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    require(a.layout_ == b.layout_, "multiplying polynomials in different rings");
    std::optional<int> cap = a.cap_;
    if (b.cap_ && (!cap || *b.cap_ < *cap))
        cap = b.cap_;
    Poly r(a.layout_, cap);
    const int n = a.layout_.nvars();
    Monomial m(n);
    for (const auto &[ma, ca] : a.terms_) {
        int da = a.degree(ma);
        for (const auto &[mb, cb] : b.terms_) {
            if (cap && da + a.degree(mb) > *cap)
                continue;
            for (int i = 0; i < n; i++) {
                unsigned e = unsigned(ma[i]) + mb[i];
                require(e <= std::numeric_limits<std::uint16_t>::max(), "exponent overflow");
                m[i] = static_cast<std::uint16_t>(e);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::shifted(int var, int e) const
{
    Poly r(layout_, cap_);
    for (const auto &[m, c] : terms_) {
        Monomial s = m;
        s.at(var) = static_cast<std::uint16_t>(s.at(var) + e);
        r.add_term(s, c);
    }
    return r;
}

Poly Poly::negate_vars(int first, int count) const
{
    Poly r(layout_, cap_);
    for (const auto &[m, c] : terms_) {
        int odd = 0;
        for (int i = first; i < first + count; i++)
            odd += m.at(i);
        r.add_term(m, odd % 2 ? mpz_class(-c) : c);
    }
    return r;
}

Poly Poly::recapped(std::optional<int> cap) const
{
    Poly r(layout_, cap);
    for (const auto &[m, c] : terms_)
        r.add_term(m, c);
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    auto name = [&](int i) {
        if (i < layout_.nx)
            return "x" + std::to_string(i + 1);
        if (i < layout_.nx + layout_.ny)
            return "y" + std::to_string(i - layout_.nx + 1);
        return std::string("t");
    };
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        mpz_class a = abs(c);
        bool unit = true;
        for (auto e : m)
            unit = unit && e == 0;
        if (a != 1 || unit)
            os << a;
        bool star = a != 1;
        for (int i = 0; i < static_cast<int>(m.size()); i++) {
            if (!m[i])
                continue;
            os << (star ? "*" : "") << name(i);
            star = true;
            if (m[i] > 1)
                os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

/* Branching over the last variable: s_shape(x_1..x_k) is the sum over
 * interlacing mu of s_mu(x_1..x_{k-1}) x_k^{|shape|-|mu|}. */
struct SchurBuilder {
    VarLayout layout;
    std::optional<int> cap;
    int first;
    std::map<std::pair<std::vector<int>, int>, Poly> memo;

    Poly build(const std::vector<int> &shape, int k)
    {
        auto key = std::make_pair(shape, k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Poly r(layout, cap);
        if (static_cast<int>(shape.size()) > k) {
            /* too many rows: zero */
        } else if (k == 0) {
            r = Poly::constant(layout, cap, 1);
        } else {
            int total = 0;
            for (int v : shape)
                total += v;
            std::vector<int> mu;
            interlace(shape, 0, mu, total, k, r);
        }
        memo.emplace(key, r);
        return r;
    }

    void interlace(const std::vector<int> &shape, int i, std::vector<int> &mu, int total, int k,
                   Poly &acc)
    {
        int slots = std::min(k - 1, static_cast<int>(shape.size()));
        if (i == slots) {
            std::vector<int> trimmed = mu;
            while (!trimmed.empty() && trimmed.back() == 0)
                trimmed.pop_back();
            int sub = 0;
            for (int v : trimmed)
                sub += v;
            acc += build(trimmed, k - 1).shifted(first + k - 1, total - sub);
            return;
        }
        int hi = shape[i];
        int lo = i + 1 < static_cast<int>(shape.size()) ? shape[i + 1] : 0;
        for (int v = lo; v <= hi; v++) {
            mu.push_back(v);
            interlace(shape, i + 1, mu, total, k, acc);
            mu.pop_back();
        }
    }
};

} // namespace

Poly schur(const std::vector<int> &shape, VarLayout layout, std::optional<int> cap, int first,
           int count)
{
    require(first >= 0 && count >= 0 && first + count <= layout.nvars(),
            "Schur variable range outside the ring");
    int total = 0;
    for (int v : shape)
        total += v;
    if (cap && total > *cap)
        return Poly(layout, cap);
    SchurBuilder b{layout, cap, first, {}};
    return b.build(shape, count);
}

} // namespace hermitian
