#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hermitian/diagrams.hpp"

namespace hermitian {

enum class FamilyKind { I, II, IIIa, IIIb, IIIc, IIId };

std::string to_string(FamilyKind f);

struct FamilyCfg {
    FamilyKind kind = FamilyKind::I;
    int P = 0; /* Type I only */
    int Q = 0; /* Type I only */
    int N = 0; /* other families */
    int k = 0;

    static FamilyCfg type_i(int P, int Q, int k) { return {FamilyKind::I, P, Q, 0, k}; }
    static FamilyCfg of(FamilyKind f, int N, int k) { return {f, 0, 0, N, k}; }
    std::string to_string() const;
};

/* How singular coordinates of lambda+rho are removed. */
enum class ReductionRule {
    MatchAcross,          /* Type I: drop a_i = b_j across the semicolon */
    OppositePairs,        /* drop a_i = -a_j */
    OppositePairsAndZero, /* drop a_i = -a_j, then a zero */
};

struct BlockPair {
    std::string name;
    HermitianPair big;
    HermitianPair reduced;
    Weight lambda;
    Weight lambda_reduced;
    int m = 0;
    ReductionRule rule = ReductionRule::OppositePairs;
    std::vector<HalfInt> deleted_left;  /* values removed from lambda+rho */
    std::vector<HalfInt> deleted_right; /* Type I right block */
    Weight twist;                       /* subtracted to form twisted weights */
    Weight twist_reduced;
};

BlockPair family_config(const FamilyCfg &cfg);
/* Arbitrary singular lambda on big with the given reduction; twists are
 * <lambda, highest coroot> times the fundamental weight of the noncompact
 * simple root. */
BlockPair explicit_pair(const HermitianPair &big, const Weight &lambda, ReductionRule rule,
                        PairType reduced_type, std::string name = "explicit");

/* <v, highest coroot> zeta */
Weight standard_twist(const HermitianPair &g, const Weight &v);

struct RawReduction {
    Weight reduced;
    std::vector<HalfInt> deleted_left;
    std::vector<HalfInt> deleted_right;
};

RawReduction reduce_coordinates(const Weight &shifted, ReductionRule rule);
/* mu+rho -> mu'+rho' */
Weight es_reduce(const BlockPair &b, const Weight &shifted);
/* mu'+rho' -> mu+rho */
Weight es_sharp(const BlockPair &b, const Weight &reduced_shifted);

/* a <= b in the root order of g */
bool root_order_leq(const HermitianPair &g, const Weight &a, const Weight &b);

/* gl dimension of F_mu for the Levi of g (product over blocks for Type I) */
mpz_class levi_dimension(const HermitianPair &g, const Weight &mu);

struct TwistedShape {
    /* Types II, III: twisted weight = whole^*.
     * Type I: twisted weight = (left^* ; right). */
    std::optional<Partition> whole;
    std::optional<Partition> left;
    std::optional<Partition> right;

    std::string to_string() const;
    friend bool operator==(const TwistedShape &, const TwistedShape &) = default;
};

TwistedShape twisted_shape(const HermitianPair &g, const Weight &twisted);

struct BlockNode {
    Partition ideal; /* ideal of the reduced pair indexing the node */
    int level = 0;
    Weight weight;
    Weight twisted;
    TwistedShape shape;
    mpz_class dim;
};

struct BlockPoset {
    HermitianPair pair;
    std::vector<BlockNode> nodes;
    std::vector<std::pair<int, int>> edges; /* covering pairs */
};

BlockPoset regular_block_poset(const BlockPair &b);
BlockPoset singular_block_poset(const BlockPair &b);

struct CongruenceReport {
    BlockPair pair;
    BlockPoset singular;
    BlockPoset regular;
    bool bijection = false;      /* ES maps singular nodes onto regular nodes */
    bool poset_iso = false;      /* covers correspond and are reflection steps on both sides */
    bool hermitian_symmetric = true; /* condition 2 holds by construction; reported as assumed */
    bool dims_equal = false;
    bool conjugate_pairs = false;
    bool root_order_agrees = false; /* full root orders agree; informational */

    bool congruent() const { return bijection && poset_iso && dims_equal; }
};

CongruenceReport congruence_check(const BlockPair &b);

} // namespace hermitian
