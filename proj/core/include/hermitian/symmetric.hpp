#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/partition.hpp"
#include "hermitian/polynomial.hpp"

namespace hermitian {

enum class ProductKind {
    CauchyPlus,   /* prod_{i,j} (1 + x_i y_j) */
    CauchyMinus,  /* prod_{i,j} (1 - x_i y_j) */
    SymMinus,     /* prod_{i<=j} (1 - x_i x_j) */
    AltMinus,     /* prod_{i<j} (1 - x_i x_j) */
    LinearMinus,  /* prod_i (1 - x_i) */
    LinearPlus,   /* prod_i (1 + x_i) */
    SymGraded,    /* prod_{i<=j} (1 + t x_i x_j) */
    AltGraded,    /* prod_{i<j} (1 + t x_i x_j) */
};

Poly expand_product(ProductKind kind, VarLayout layout, std::optional<int> cap);

enum class IdentityFamily {
    DualCauchy,
    LittlewoodII,
    LittlewoodIII,
    LittlewoodIIIab,
    ReciprocalII,
    ReciprocalIII,
    GenI,
    GenII,
    GenIIIa,
    GenIIIb,
    General,
};

struct IdentityKind {
    IdentityFamily family = IdentityFamily::DualCauchy;
    int k = 0;
    int a = 0; /* General: number of odd columns */
    int b = 0; /* General: number of even columns */

    std::string to_string() const;
};

struct IdentitySizes {
    int p = 0;
    int q = 0;
    int n = 0;
};

/* One summand c * t^e * s_x(x) s_y(y) of a right-hand side; sign is (-1)^ell. */
struct RhsTerm {
    Partition index;  /* the partition the sum runs over */
    Partition x_shape;
    std::optional<Partition> y_shape;
    int ell = 0;
    int t_power = 0;
    bool sign_alternates = true;

    int sign() const { return sign_alternates && (ell % 2) ? -1 : 1; }
};

using EllFunction = std::function<int(const Partition &, const IdentityKind &)>;

/* Sign exponent (or t exponent for the graded reciprocals) of a summand.
 * For GenI the argument is the x-shape (alpha+k|beta). */
int ell_exponent(const Partition &pi, const IdentityKind &kind);

VarLayout identity_layout(const IdentityKind &kind, const IdentitySizes &sizes);
std::vector<Partition> identity_left_shapes(const IdentityKind &kind, const IdentitySizes &sizes);
std::vector<RhsTerm> identity_terms(const IdentityKind &kind, const IdentitySizes &sizes,
                                    const EllFunction &ell = ell_exponent);
Poly identity_lhs(const IdentityKind &kind, const IdentitySizes &sizes, std::optional<int> cap);
Poly identity_rhs(const IdentityKind &kind, const IdentitySizes &sizes, std::optional<int> cap,
                  const std::vector<RhsTerm> &terms);

struct IdentityReport {
    IdentityKind kind;
    IdentitySizes sizes;
    int cap;
    bool verified;
    Poly lhs;
    Poly rhs;
    Poly residual;
    std::vector<RhsTerm> terms; /* only those of degree <= cap */
};

IdentityReport verify_identity(const IdentityKind &kind, const IdentitySizes &sizes, int cap,
                               const EllFunction &ell = ell_exponent);

} // namespace hermitian
