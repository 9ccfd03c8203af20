#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermitian/partition.hpp"
#include "hermitian/weight.hpp"

namespace hermitian {

/* Type I: (A_{p+q-1}, A_{p-1} x A_{q-1}); Type II: (C_n, A_{n-1});
 * Type III: (D_n, A_{n-1}). */
struct HermitianPair {
    PairType type = PairType::I;
    int p = 0;
    int q = 0;
    int n = 0;

    static HermitianPair type_i(int p, int q);
    static HermitianPair type_ii(int n);
    static HermitianPair type_iii(int n);

    int coords() const { return type == PairType::I ? p + q : n; }
    int simple_count() const { return type == PairType::I ? p + q - 1 : n; }
    int noncompact_count() const; /* |Phi(p+)| */
    std::string to_string() const;

    friend bool operator==(const HermitianPair &, const HermitianPair &) = default;
};

Weight rho(const HermitianPair &g);
/* lambda in Lambda^+(k): weakly decreasing inside each gl block with integral gaps */
void validate_weight(const HermitianPair &g, const Weight &lambda);
bool is_k_dominant(const HermitianPair &g, const Weight &lambda);

/* d_i = <v, alpha_i coroot> for i = 1..simple_count, returned 0-based */
std::vector<HalfInt> simple_pairings(const HermitianPair &g, const Weight &v);

struct RootIndex {
    int i;
    int j;
};

/* noncompact root beta_ij in the box (row, col) of the diagram, 0-based */
RootIndex root_at(const HermitianPair &g, int row, int col);
Weight root_vector(const HermitianPair &g, RootIndex r);
HalfInt coroot_pairing(const HermitianPair &g, const Weight &v, const Weight &root);
Weight reflect(const HermitianPair &g, const Weight &root, const Weight &v);

/* first column of a diagram row: 0 for Type I, the row itself for shifted shapes */
int row_start(const HermitianPair &g, int row);
bool is_lower_ideal(const HermitianPair &g, const Partition &rows);
std::vector<Partition> lower_ideals(const HermitianPair &g);

struct FilledDiagram {
    HermitianPair pair;
    Partition shape;
    std::vector<std::vector<HalfInt>> entries; /* per row, left to right */

    std::vector<HalfInt> row_sums() const;
    std::vector<HalfInt> column_sums() const; /* indexed by absolute column */
    std::string to_string() const;
};

FilledDiagram fill_diagram(const HermitianPair &g, const Partition &ideal, const Weight &lambda);
Weight rows_stacked(const FilledDiagram &f);
/* closed form: lambda + (rows of the filled stack)^* */
Weight w_dot_lambda(const HermitianPair &g, const Partition &ideal, const Weight &lambda);
/* recursive form: subtract <lambda+rho, f(beta)> beta box by box, with
 * f(beta) = v^{-1} beta computed by reflections */
Weight w_dot_lambda_recursive(const HermitianPair &g, const Partition &ideal,
                              const Weight &lambda);
/* w applied to v using the delete/negate/append description of w */
Weight weyl_apply(const HermitianPair &g, const Partition &ideal, const Weight &v);

struct BggNode {
    Partition ideal;
    int level;
    Weight weight;
};

struct BggComplex {
    HermitianPair pair;
    Weight lambda;
    std::vector<BggNode> nodes;            /* level order */
    std::vector<std::pair<int, int>> edges; /* covering pairs, smaller ideal first */

    std::vector<int> level_sizes() const;
};

BggComplex bgg_complex(const HermitianPair &g, const Weight &lambda);
std::string bgg_poset_json(const BggComplex &c);

} // namespace hermitian
