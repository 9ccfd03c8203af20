#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitian/error.hpp"

namespace hermitian {

class Partition {
  public:
    Partition() = default;
    /* parts must be nonnegative and weakly decreasing; trailing zeros dropped */
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int rank() const;
    bool empty() const { return parts_.empty(); }
    /* part i (0-based), zero past the end */
    int at(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool fits_in(int rows, int cols) const;
    bool contains(const Partition &other) const;
    std::string to_string() const;

    friend auto operator<=>(const Partition &, const Partition &) = default;

  private:
    std::vector<int> parts_;
};

struct Frobenius {
    std::vector<int> arms;
    std::vector<int> legs;

    int rank() const { return static_cast<int>(arms.size()); }
    std::string to_string() const;
    friend bool operator==(const Frobenius &, const Frobenius &) = default;
};

Frobenius frobenius(const Partition &p);
Partition from_frobenius(const std::vector<int> &arms, const std::vector<int> &legs);
inline Partition from_frobenius(const Frobenius &f) { return from_frobenius(f.arms, f.legs); }

/* (a+arm_shift | b+leg_shift) for p = (a|b) */
Partition shift_frobenius(const Partition &p, int arm_shift, int leg_shift);

std::vector<int> add_constant(std::vector<int> v, int c);

struct Cell {
    int row;
    int col;
    int hook;
    int content;
};

std::vector<Cell> cells(const Partition &p);

/* alpha when p = (alpha+m | alpha), otherwise nothing */
std::optional<std::vector<int>> asc_core(const Partition &p, int m);

/* size ascending, then reverse lexicographic within a size */
bool graded_revlex_less(const Partition &a, const Partition &b);
void sort_graded_revlex(std::vector<Partition> &v);

enum class ShapeKind {
    Box,           /* rows x cols */
    AscM,          /* (alpha+m|alpha), alpha_1 < n */
    EvenRows,      /* inside rows x cols, every row even */
    EvenColumns,   /* inside rows x cols, every one of the cols columns even */
    OddColumns,    /* inside rows x cols, every one of the cols columns odd */
    MixedColumns,  /* inside rows x (odd+even), exactly odd columns of odd length */
    Strict,        /* strict partitions with parts <= max_part */
};

enum class RankParity { Any, Even, Odd };

struct ShapeFamily {
    ShapeKind kind = ShapeKind::Box;
    int rows = 0;
    int cols = 0;
    int m = 0;
    int odd = 0;
    RankParity parity = RankParity::Any;

    static ShapeFamily box(int rows, int cols) { return {ShapeKind::Box, rows, cols}; }
    static ShapeFamily asc(int n, int m, RankParity parity = RankParity::Any)
    {
        return {ShapeKind::AscM, n, 0, m, 0, parity};
    }
    static ShapeFamily even_rows(int rows, int cols) { return {ShapeKind::EvenRows, rows, cols}; }
    static ShapeFamily even_columns(int rows, int cols) { return {ShapeKind::EvenColumns, rows, cols}; }
    static ShapeFamily odd_columns(int rows, int cols) { return {ShapeKind::OddColumns, rows, cols}; }
    static ShapeFamily mixed_columns(int rows, int odd, int even)
    {
        return {ShapeKind::MixedColumns, rows, odd + even, 0, odd};
    }
    static ShapeFamily strict(int max_part) { return {ShapeKind::Strict, 0, max_part}; }
};

/* sorted graded reverse-lexicographically */
std::vector<Partition> enumerate_shapes(const ShapeFamily &f);

/* all strict sequences with entries in [lo, hi], including the empty one */
std::vector<std::vector<int>> strict_subsets(int lo, int hi);

/* Stacked diagram of an ideal.  Type I takes a partition in a box and
 * returns (conjugate, ideal); Types II and III take the row lengths of a
 * shifted ideal. */
std::pair<Partition, Partition> stack_type_i(const Partition &ideal);
Partition stack_shifted(const Partition &ideal_rows, PairType t);

} // namespace hermitian
