#include "hermitian/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hermitian {

std::string to_string(PairType t)
{
    switch (t) {
    case PairType::I: return "I";
    case PairType::II: return "II";
    case PairType::III: return "III";
    }
    return "?";
}

namespace {

std::string join(const std::vector<int> &v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); i++)
        os << (i ? "," : "") << v[i];
    return os.str();
}

bool strictly_decreasing(const std::vector<int> &v)
{
    for (std::size_t i = 1; i < v.size(); i++)
        if (v[i] >= v[i - 1])
            return false;
    return true;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); i++) {
        require(parts_[i] >= 0, "partition has a negative part: " + to_string());
        require(i == 0 || parts_[i] <= parts_[i - 1],
                "partition is not weakly decreasing: " + to_string());
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::rank() const
{
    int r = 0;
    while (r < length() && parts_[r] >= r + 1)
        r++;
    return r;
}

Partition Partition::conjugate() const
{
    std::vector<int> c(empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; j++)
            c[j]++;
    return Partition(std::move(c));
}

bool Partition::fits_in(int rows, int cols) const
{
    return length() <= rows && (empty() || parts_[0] <= cols);
}

bool Partition::contains(const Partition &other) const
{
    if (other.length() > length())
        return false;
    for (int i = 0; i < other.length(); i++)
        if (other.parts_[i] > parts_[i])
            return false;
    return true;
}

std::string Partition::to_string() const
{
    return "[" + join(parts_) + "]";
}

std::string Frobenius::to_string() const
{
    return "(" + join(arms) + "|" + join(legs) + ")";
}

Frobenius frobenius(const Partition &p)
{
    Frobenius f;
    Partition c = p.conjugate();
    for (int i = 0; i < p.rank(); i++) {
        f.arms.push_back(p.at(i) - i - 1);
        f.legs.push_back(c.at(i) - i - 1);
    }
    return f;
}

Partition from_frobenius(const std::vector<int> &arms, const std::vector<int> &legs)
{
    Frobenius f{arms, legs};
    require(arms.size() == legs.size(), "Frobenius symbol with unequal rows: " + f.to_string());
    require(strictly_decreasing(arms) && strictly_decreasing(legs),
            "Frobenius rows must strictly decrease: " + f.to_string());
    require(arms.empty() || (arms.back() >= 0 && legs.back() >= 0),
            "Frobenius entries must be nonnegative: " + f.to_string());
    int r = static_cast<int>(arms.size());
    int rows = r ? legs[0] + 1 : 0;
    std::vector<int> parts(std::max(rows, r), 0);
    for (int i = 0; i < r; i++)
        parts[i] = arms[i] + i + 1;
    for (int i = r; i < rows; i++)
        for (int j = 0; j < r; j++)
            if (legs[j] + j + 1 > i)
                parts[i]++;
    return Partition(std::move(parts));
}

std::vector<int> add_constant(std::vector<int> v, int c)
{
    for (int &x : v)
        x += c;
    return v;
}

Partition shift_frobenius(const Partition &p, int arm_shift, int leg_shift)
{
    Frobenius f = frobenius(p);
    return from_frobenius(add_constant(f.arms, arm_shift), add_constant(f.legs, leg_shift));
}

std::vector<Cell> cells(const Partition &p)
{
    std::vector<Cell> out;
    Partition c = p.conjugate();
    for (int i = 0; i < p.length(); i++)
        for (int j = 0; j < p.at(i); j++)
            out.push_back({i, j, p.at(i) - j + c.at(j) - i - 1, j - i});
    return out;
}

std::optional<std::vector<int>> asc_core(const Partition &p, int m)
{
    Frobenius f = frobenius(p);
    for (int i = 0; i < f.rank(); i++)
        if (f.arms[i] != f.legs[i] + m)
            return std::nullopt;
    return f.legs;
}

bool graded_revlex_less(const Partition &a, const Partition &b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.parts() > b.parts();
}

void sort_graded_revlex(std::vector<Partition> &v)
{
    std::sort(v.begin(), v.end(), graded_revlex_less);
}

std::vector<std::vector<int>> strict_subsets(int lo, int hi)
{
    std::vector<std::vector<int>> out;
    int width = std::max(0, hi - lo + 1);
    require(width < 31, "strict subset range too wide");
    for (unsigned mask = 0; mask < (1u << width); mask++) {
        std::vector<int> s;
        for (int v = hi; v >= lo; v--)
            if (mask & (1u << (v - lo)))
                s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

void boxed(int rows, int cols, std::vector<int> &cur, std::vector<Partition> &out)
{
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows)
        return;
    int top = cur.empty() ? cols : cur.back();
    for (int v = 1; v <= top; v++) {
        cur.push_back(v);
        boxed(rows, cols, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> box(int rows, int cols)
{
    require(rows >= 0 && cols >= 0, "box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    boxed(rows, cols, cur, out);
    return out;
}

int odd_column_count(const Partition &p, int cols)
{
    Partition c = p.conjugate();
    int n = 0;
    for (int j = 0; j < cols; j++)
        n += c.at(j) % 2;
    return n;
}

bool parity_ok(int rank, RankParity parity)
{
    return parity == RankParity::Any || (rank % 2 == 0) == (parity == RankParity::Even);
}

} // namespace

std::vector<Partition> enumerate_shapes(const ShapeFamily &f)
{
    std::vector<Partition> out;
    switch (f.kind) {
    case ShapeKind::Box:
        out = box(f.rows, f.cols);
        break;
    case ShapeKind::AscM:
        require(f.rows >= 0, "ASC family needs n >= 0");
        for (auto &alpha : strict_subsets(0, f.rows - 1)) {
            if (!parity_ok(static_cast<int>(alpha.size()), f.parity))
                continue;
            auto arms = add_constant(alpha, f.m);
            if (!alpha.empty() && arms.back() < 0)
                continue;
            out.push_back(from_frobenius(arms, alpha));
        }
        break;
    case ShapeKind::EvenRows:
        for (auto &p : box(f.rows, f.cols))
            if (std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; }))
                out.push_back(p);
        break;
    case ShapeKind::EvenColumns:
        for (auto &p : box(f.rows, f.cols))
            if (odd_column_count(p, f.cols) == 0)
                out.push_back(p);
        break;
    case ShapeKind::OddColumns:
        for (auto &p : box(f.rows, f.cols))
            if (odd_column_count(p, f.cols) == f.cols)
                out.push_back(p);
        break;
    case ShapeKind::MixedColumns:
        for (auto &p : box(f.rows, f.cols))
            if (odd_column_count(p, f.cols) == f.odd)
                out.push_back(p);
        break;
    case ShapeKind::Strict:
        for (auto &s : strict_subsets(1, f.cols))
            out.emplace_back(s);
        break;
    }
    sort_graded_revlex(out);
    return out;
}

std::pair<Partition, Partition> stack_type_i(const Partition &ideal)
{
    return {ideal.conjugate(), ideal};
}

Partition stack_shifted(const Partition &ideal_rows, PairType t)
{
    require(t != PairType::I, "stack_shifted takes a Type II or III ideal");
    require(strictly_decreasing(ideal_rows.parts()),
            "shifted ideal rows must strictly decrease: " + ideal_rows.to_string());
    auto alpha = add_constant(ideal_rows.parts(), -1);
    if (t == PairType::II)
        return from_frobenius(add_constant(alpha, 1), alpha);
    return from_frobenius(alpha, add_constant(alpha, 1));
}

} // namespace hermitian
