#include "hermitian/dimension.hpp"

#include <sstream>
#include <stdexcept>

namespace hermitian {

mpz_class dim_partition(const Partition &p, int n)
{
    require(n >= 0, "gl_n rank must be nonnegative");
    mpz_class num = 1, den = 1;
    for (const Cell &c : cells(p)) {
        if (n + c.content == 0)
            return 0;
        num *= n + c.content;
        den *= c.hook;
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("hook-content quotient is not integral");
    return q;
}

mpz_class dim_gl(const std::vector<HalfInt> &mu)
{
    if (mu.empty())
        return 1;
    std::vector<int> parts;
    for (std::size_t i = 0; i < mu.size(); i++) {
        require(i == 0 || mu[i] <= mu[i - 1], "gl weight is not weakly decreasing");
        HalfInt d = mu[i] - mu.back();
        require(d.is_integer(), "gl weight entries differ by a half-integer");
        parts.push_back(static_cast<int>(d.to_int()));
    }
    return dim_partition(Partition(parts), static_cast<int>(mu.size()));
}

mpz_class dim_gl(const std::vector<long> &mu)
{
    std::vector<HalfInt> h(mu.begin(), mu.end());
    return dim_gl(h);
}

TwoBlockResult verify_two_block(const std::vector<int> &alpha, const std::vector<int> &beta, int p,
                         int q, int m)
{
    require(m >= 0, "m must be nonnegative");
    Partition base = from_frobenius(alpha, beta);
    require(base.fits_in(p, q), "(alpha|beta) does not fit in the p x q box");
    TwoBlockResult r;
    r.lhs_x = from_frobenius(add_constant(alpha, m), beta);
    r.lhs_y = from_frobenius(add_constant(beta, m), alpha);
    r.rhs_x = from_frobenius(alpha, add_constant(beta, m));
    r.rhs_y = from_frobenius(beta, add_constant(alpha, m));
    r.lhs = dim_partition(r.lhs_x, p) * dim_partition(r.lhs_y, q);
    r.rhs = dim_partition(r.rhs_x, p + m) * dim_partition(r.rhs_y, q + m);
    r.equal = r.lhs == r.rhs;
    return r;
}

ConjugateResult verify_conjugate(const Partition &shape, int m, int n_max)
{
    require(m >= 0, "m must be nonnegative");
    require(n_max >= 1, "n_max must be positive");
    ConjugateResult r;
    r.core = asc_core(shape, m);
    Partition conj = shape.conjugate();
    for (int n = 1; n <= n_max; n++) {
        ConjugateRow row{n, dim_partition(shape, n), dim_partition(conj, n + m)};
        if (row.dim_shape != row.dim_conjugate && !r.least_witness)
            r.least_witness = n;
        r.rows.push_back(row);
    }
    r.all_equal = !r.least_witness;
    return r;
}

LaurentPoly principal_specialization(const Partition &shape, int n)
{
    require(n >= 0, "number of variables must be nonnegative");
    /* q-hook-content formula in Q = q^2 */
    std::vector<mpz_class> num{1};
    long hook_total = 0;
    for (const Cell &c : cells(shape)) {
        int e = n + c.content;
        if (e == 0)
            return {};
        std::vector<mpz_class> next(num.size() + e, 0);
        for (std::size_t i = 0; i < num.size(); i++) {
            next[i] += num[i];
            next[i + e] -= num[i];
        }
        num = std::move(next);
        hook_total += c.hook;
    }
    for (const Cell &c : cells(shape))
        for (std::size_t i = c.hook; i < num.size(); i++)
            num[i] += num[i - c.hook];
    long deg = static_cast<long>(num.size()) - 1 - hook_total;
    for (std::size_t i = deg + 1; i < num.size(); i++)
        if (num[i] != 0)
            throw std::logic_error("q-hook-content quotient is not a polynomial");
    long b = 0;
    for (int i = 0; i < shape.length(); i++)
        b += static_cast<long>(i) * shape.at(i);
    LaurentPoly out;
    long offset = static_cast<long>(n - 1) * shape.size();
    for (long i = 0; i <= deg; i++)
        if (num[i] != 0)
            out[2 * (i + b) - offset] = num[i];
    return out;
}

std::string to_string(const LaurentPoly &f, const char *var)
{
    if (f.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        mpz_class c = it->second;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        mpz_class a = abs(c);
        if (it->first == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << "*";
        os << var;
        if (it->first != 1)
            os << "^" << it->first;
    }
    return os.str();
}

} // namespace hermitian
