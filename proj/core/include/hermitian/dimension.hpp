#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hermitian/partition.hpp"
#include "hermitian/weight.hpp"

namespace hermitian {

/* dim of the gl_n module with highest weight p (zero when p has more than n rows) */
mpz_class dim_partition(const Partition &p, int n);

/* dim of the gl_n module of a weakly decreasing n-tuple; entries may be
 * negative, and may be half-integers provided they agree mod Z */
mpz_class dim_gl(const std::vector<HalfInt> &mu);
mpz_class dim_gl(const std::vector<long> &mu);

struct TwoBlockResult {
    Partition lhs_x, lhs_y, rhs_x, rhs_y;
    mpz_class lhs, rhs;
    bool equal;
};

/* (alpha|beta) must lie in the p x q box */
TwoBlockResult verify_two_block(const std::vector<int> &alpha, const std::vector<int> &beta, int p,
                         int q, int m);

struct ConjugateRow {
    int n;
    mpz_class dim_shape;
    mpz_class dim_conjugate;
};

struct ConjugateResult {
    std::optional<std::vector<int>> core; /* alpha when shape = (alpha+m|alpha) */
    std::vector<ConjugateRow> rows;           /* n = 1..n_max */
    std::optional<int> least_witness;     /* first n with unequal dimensions */
    bool all_equal;
};

ConjugateResult verify_conjugate(const Partition &shape, int m, int n_max);

/* exponent -> coefficient */
using LaurentPoly = std::map<long, mpz_class>;

/* s_shape(q^{n-1}, q^{n-3}, ..., q^{1-n}) */
LaurentPoly principal_specialization(const Partition &shape, int n);
std::string to_string(const LaurentPoly &f, const char *var = "q");

} // namespace hermitian
