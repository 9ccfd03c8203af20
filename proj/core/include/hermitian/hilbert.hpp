#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hermitian/blocks.hpp"

namespace hermitian {

struct HilbertSeries {
    FamilyCfg family;
    std::map<long, mpz_class> numerator; /* doubled exponent of t -> coefficient */
    int gk_dimension = 0;                /* d in P(t)/(1-t)^d */
    std::vector<Partition> shapes;       /* the nu summed over */

    mpz_class bernstein_degree() const;
    /* same series in t^2: numerator exponents become integers, denominator (1-t^2)^d */
    std::map<long, mpz_class> invariant_numerator() const { return numerator; }
    /* coefficients of P(t)/(1-t)^d at t^{j/2}, j = 0..max_doubled */
    std::vector<mpz_class> taylor(int max_doubled) const;
    std::string to_string() const;
};

HilbertSeries hilbert(const FamilyCfg &cfg);
/* |Phi(p+)| - |Phi(p'+)| from root data */
int root_gk_dimension(const FamilyCfg &cfg);
/* closed form listed per family */
int table_gk_dimension(const FamilyCfg &cfg);
/* dim F_lambda and dim F_lambda' as Levi modules */
std::pair<mpz_class, mpz_class> transfer_dimensions(const FamilyCfg &cfg);

std::string format_half_power(long doubled_exponent);

} // namespace hermitian
