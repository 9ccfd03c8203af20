#include "hermitian/hilbert.hpp"

#include <sstream>

#include "hermitian/dimension.hpp"

namespace hermitian {

mpz_class HilbertSeries::bernstein_degree() const
{
    mpz_class s = 0;
    for (const auto &[e, c] : numerator)
        s += c;
    return s;
}

std::vector<mpz_class> HilbertSeries::taylor(int max_doubled) const
{
    /* in u = t^{1/2}: N(u) / (1 - u^2)^d */
    std::vector<mpz_class> a(max_doubled + 1, 0);
    for (const auto &[e, c] : numerator)
        if (e <= max_doubled)
            a[e] += c;
    for (int step = 0; step < gk_dimension; step++)
        for (int i = 2; i <= max_doubled; i++)
            a[i] += a[i - 2];
    return a;
}

std::string format_half_power(long e)
{
    if (e % 2 == 0)
        return std::to_string(e / 2);
    return std::to_string(e) + "/2";
}

std::string HilbertSeries::to_string() const
{
    std::ostringstream os;
    os << "P(t) = ";
    bool first = true;
    for (const auto &[e, c] : numerator) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        mpz_class a = abs(c);
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << "·";
        os << "t^{" << format_half_power(e) << "}";
    }
    if (first)
        os << "0";
    return os.str();
}

int root_gk_dimension(const FamilyCfg &cfg)
{
    BlockPair b = family_config(cfg);
    return b.big.noncompact_count() - b.reduced.noncompact_count();
}

int table_gk_dimension(const FamilyCfg &cfg)
{
    BlockPair b = family_config(cfg);
    const int k = cfg.k;
    switch (cfg.kind) {
    case FamilyKind::I: return k * (b.reduced.p + b.reduced.q + k);
    case FamilyKind::II: return k * (2 * b.reduced.n + 2 * k + 1);
    case FamilyKind::IIIa:
    case FamilyKind::IIIb: return k * (2 * b.reduced.n + k - 1) / 2;
    case FamilyKind::IIIc:
    case FamilyKind::IIId: return k * (2 * b.reduced.n + 2 * k - 1);
    }
    return 0;
}

HilbertSeries hilbert(const FamilyCfg &cfg)
{
    BlockPair b = family_config(cfg);
    HilbertSeries h;
    h.family = cfg;
    h.gk_dimension = root_gk_dimension(cfg);
    const int k = cfg.k;
    const int n = b.reduced.n;
    if (cfg.kind == FamilyKind::I) {
        const int p = b.reduced.p, q = b.reduced.q;
        h.shapes = enumerate_shapes(ShapeFamily::box(std::min(p, q), k));
        for (const auto &nu : h.shapes)
            h.numerator[2L * nu.size()] += dim_partition(nu, p) * dim_partition(nu, q);
        return h;
    }
    switch (cfg.kind) {
    case FamilyKind::II: h.shapes = enumerate_shapes(ShapeFamily::even_rows(n, 2 * k)); break;
    case FamilyKind::IIIa: h.shapes = enumerate_shapes(ShapeFamily::even_columns(n, k)); break;
    case FamilyKind::IIIb: h.shapes = enumerate_shapes(ShapeFamily::odd_columns(n, k)); break;
    case FamilyKind::IIIc: h.shapes = enumerate_shapes(ShapeFamily::even_columns(n, 2 * k + 1)); break;
    case FamilyKind::IIId: h.shapes = enumerate_shapes(ShapeFamily::odd_columns(n, 2 * k + 1)); break;
    default: break;
    }
    for (const auto &nu : h.shapes)
        h.numerator[nu.size()] += dim_partition(nu, n);
    for (auto it = h.numerator.begin(); it != h.numerator.end();)
        it = it->second == 0 ? h.numerator.erase(it) : std::next(it);
    return h;
}

std::pair<mpz_class, mpz_class> transfer_dimensions(const FamilyCfg &cfg)
{
    BlockPair b = family_config(cfg);
    return {levi_dimension(b.big, b.lambda), levi_dimension(b.reduced, b.lambda_reduced)};
}

} // namespace hermitian
