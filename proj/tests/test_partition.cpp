#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hermitian/literal.hpp"
#include "hermitian/partition.hpp"
#include "oracles.hpp"

using namespace hermitian;

namespace {

std::vector<Partition> all_in_box(int rows, int cols)
{
    return enumerate_shapes(ShapeFamily::box(rows, cols));
}

std::multiset<int> hooks(const Partition &p)
{
    std::multiset<int> s;
    for (auto &c : cells(p))
        s.insert(c.hook);
    return s;
}

std::multiset<int> contents(const Partition &p)
{
    std::multiset<int> s;
    for (auto &c : cells(p))
        s.insert(c.content);
    return s;
}

std::vector<Partition> filtered(int rows, int cols, const std::function<bool(const Partition &)> &keep)
{
    std::vector<Partition> out;
    for (auto &p : all_in_box(rows, cols))
        if (keep(p))
            out.push_back(p);
    sort_graded_revlex(out);
    return out;
}

} // namespace

TEST_CASE("partitions normalize trailing zeros and reject bad parts")
{
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({3, 1, 0}).length() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, -1}), ValidationError);
}

TEST_CASE("conjugate examples")
{
    CHECK(Partition({7, 5, 4, 2, 1, 1}).conjugate() == Partition({6, 4, 3, 3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({5, 3, 2}).conjugate() == Partition({3, 3, 2, 1, 1}));
}

TEST_CASE("conjugate agrees with cell transposition and is an involution")
{
    for (auto &p : all_in_box(6, 6)) {
        CHECK(p.conjugate() == oracle::transpose(p));
        CHECK(p.conjugate().conjugate() == p);
    }
}

TEST_CASE("frobenius examples")
{
    Frobenius f = frobenius(Partition({7, 5, 4, 2, 1, 1}));
    CHECK(f.arms == std::vector<int>{6, 3, 1});
    CHECK(f.legs == std::vector<int>{5, 2, 0});
    CHECK(f.to_string() == "(6,3,1|5,2,0)");
    CHECK(frobenius(Partition()).rank() == 0);
    CHECK(from_frobenius(std::vector<int>{}, std::vector<int>{}) == Partition());
    CHECK(from_frobenius(std::vector<int>{2}, std::vector<int>{1}) == Partition({3, 1}));
}

TEST_CASE("malformed frobenius symbols are rejected")
{
    CHECK_THROWS_AS(from_frobenius(std::vector<int>{1, 1}, std::vector<int>{1, 0}), ValidationError);
    CHECK_THROWS_AS(from_frobenius(std::vector<int>{2}, std::vector<int>{1, 0}), ValidationError);
    CHECK_THROWS_AS(from_frobenius(std::vector<int>{0, 1}, std::vector<int>{1, 0}), ValidationError);
    CHECK_THROWS_AS(from_frobenius(std::vector<int>{-1}, std::vector<int>{0}), ValidationError);
}

TEST_CASE("frobenius round trips, exhaustive in a box and random up to rank 12")
{
    for (auto &p : all_in_box(6, 6)) {
        Frobenius f = frobenius(p);
        CHECK(f.rank() == p.rank());
        CHECK(from_frobenius(f) == p);
    }
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> rank(0, 12);
    for (int trial = 0; trial < 300; trial++) {
        int r = rank(gen);
        auto pick = [&] {
            std::vector<int> pool(20);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), gen);
            std::vector<int> v(pool.begin(), pool.begin() + r);
            std::sort(v.rbegin(), v.rend());
            return v;
        };
        Frobenius f{pick(), pick()};
        CHECK(frobenius(from_frobenius(f)) == f);
    }
}

TEST_CASE("hooks and contents examples")
{
    CHECK(hooks(Partition({2, 1})) == std::multiset<int>{3, 1, 1});
    CHECK(contents(Partition({2, 1})) == std::multiset<int>{0, 1, -1});
    CHECK(hooks(Partition({1})) == std::multiset<int>{1});
    CHECK(contents(Partition({1})) == std::multiset<int>{0});
    CHECK(hooks(Partition({2, 2})) == std::multiset<int>{3, 2, 2, 1});
    CHECK(contents(Partition({2, 2})) == std::multiset<int>{-1, 0, 0, 1});
}

TEST_CASE("hooks are conjugation invariant and contents flip")
{
    for (auto &p : all_in_box(5, 5)) {
        CHECK(cells(p).size() == static_cast<std::size_t>(p.size()));
        CHECK(hooks(p) == hooks(p.conjugate()));
        std::multiset<int> flipped;
        for (int c : contents(p))
            flipped.insert(-c);
        CHECK(contents(p.conjugate()) == flipped);
    }
}

TEST_CASE("form (alpha+m|alpha) examples")
{
    CHECK(asc_core(Partition({7, 5, 4, 2, 1, 1}), 1) == std::vector<int>{5, 2, 0});
    CHECK_FALSE(asc_core(Partition({2, 2}), 1).has_value());
    CHECK(asc_core(Partition({3}), 2) == std::vector<int>{0});
    CHECK(asc_core(Partition(), 4) == std::vector<int>{});
}

TEST_CASE("form detection agrees with its definition")
{
    for (auto &p : all_in_box(6, 6))
        for (int m = 0; m <= 3; m++) {
            Frobenius f = frobenius(p);
            bool form = true;
            for (int i = 0; i < f.rank(); i++)
                form = form && f.arms[i] == f.legs[i] + m;
            auto core = asc_core(p, m);
            REQUIRE(core.has_value() == form);
            if (core)
                CHECK(from_frobenius(add_constant(*core, m), *core) == p);
        }
}

TEST_CASE("enumeration examples")
{
    CHECK(all_in_box(2, 2).size() == 6);
    auto asc = enumerate_shapes(ShapeFamily::asc(3, 1));
    std::vector<Partition> fig = {Partition(),          Partition({2}),       Partition({3, 1}),
                                  Partition({4, 1, 1}), Partition({3, 3}),    Partition({4, 3, 1}),
                                  Partition({4, 4, 2}), Partition({4, 4, 4})};
    CHECK(asc == fig);
    CHECK(enumerate_shapes(ShapeFamily::even_columns(3, 2)) ==
          std::vector<Partition>{Partition(), Partition({1, 1}), Partition({2, 2})});
}

TEST_CASE("enumeration order is graded reverse lexicographic, without repeats")
{
    auto v = all_in_box(4, 4);
    for (std::size_t i = 0; i + 1 < v.size(); i++) {
        CHECK(graded_revlex_less(v[i], v[i + 1]));
        CHECK((v[i].size() < v[i + 1].size() || v[i] > v[i + 1]));
    }
}

TEST_CASE("ASC counts are powers of two")
{
    for (int n = 0; n <= 8; n++)
        CHECK(enumerate_shapes(ShapeFamily::asc(n, 1)).size() == (std::size_t{1} << n));
}

TEST_CASE("shape families match brute-force filters")
{
    for (int rows = 1; rows <= 4; rows++)
        for (int cols = 1; cols <= 4; cols++) {
            auto col_lengths = [&](const Partition &p) {
                std::vector<int> c(cols);
                for (int j = 0; j < cols; j++)
                    c[j] = p.conjugate().at(j);
                return c;
            };
            CHECK(enumerate_shapes(ShapeFamily::even_rows(rows, cols)) ==
                  filtered(rows, cols, [&](const Partition &p) {
                      return std::all_of(p.parts().begin(), p.parts().end(),
                                         [](int x) { return x % 2 == 0; });
                  }));
            CHECK(enumerate_shapes(ShapeFamily::even_columns(rows, cols)) ==
                  filtered(rows, cols, [&](const Partition &p) {
                      auto c = col_lengths(p);
                      return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
                  }));
            CHECK(enumerate_shapes(ShapeFamily::odd_columns(rows, cols)) ==
                  filtered(rows, cols, [&](const Partition &p) {
                      auto c = col_lengths(p);
                      return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 1; });
                  }));
            for (int odd = 0; odd <= cols; odd++)
                CHECK(enumerate_shapes(ShapeFamily::mixed_columns(rows, odd, cols - odd)) ==
                      filtered(rows, cols, [&](const Partition &p) {
                          auto c = col_lengths(p);
                          return std::count_if(c.begin(), c.end(),
                                               [](int x) { return x % 2 == 1; }) == odd;
                      }));
        }
    for (int n = 0; n <= 5; n++) {
        auto strict = enumerate_shapes(ShapeFamily::strict(n));
        CHECK(strict.size() == (std::size_t{1} << n));
        for (auto &p : strict)
            for (int i = 0; i + 1 < p.length(); i++)
                CHECK(p.at(i) > p.at(i + 1));
    }
}

TEST_CASE("ASC shapes by rank parity split the whole family")
{
    for (int n = 1; n <= 6; n++)
        for (int m = 0; m <= 3; m++) {
            auto even = enumerate_shapes(ShapeFamily::asc(n, m, RankParity::Even));
            auto odd = enumerate_shapes(ShapeFamily::asc(n, m, RankParity::Odd));
            CHECK(even.size() + odd.size() == enumerate_shapes(ShapeFamily::asc(n, m)).size());
            for (auto &p : even)
                CHECK(p.rank() % 2 == 0);
            for (auto &p : odd)
                CHECK(p.rank() % 2 == 1);
        }
}

TEST_CASE("stacked shapes examples")
{
    CHECK(stack_shifted(Partition({5, 3, 2}), PairType::II) == Partition({6, 5, 5, 3, 1}));
    CHECK(stack_shifted(Partition({5, 3, 2}), PairType::III) == Partition({5, 4, 4, 3, 3, 1}));
    auto [neg, pos] = stack_type_i(Partition({5, 3, 2}));
    CHECK(neg == Partition({3, 3, 2, 1, 1}));
    CHECK(pos == Partition({5, 3, 2}));
    CHECK_THROWS_AS(stack_shifted(Partition({2, 2}), PairType::II), ValidationError);
}

TEST_CASE("stacked shifted shapes are (alpha+1|alpha) and its conjugate")
{
    for (auto &alpha : strict_subsets(0, 6)) {
        Partition rows(add_constant(alpha, 1));
        Partition asc = from_frobenius(add_constant(alpha, 1), alpha);
        CHECK(stack_shifted(rows, PairType::II) == asc);
        CHECK(asc_core(stack_shifted(rows, PairType::II), 1).has_value());
        CHECK(stack_shifted(rows, PairType::III) == asc.conjugate());
    }
    for (auto &p : all_in_box(3, 4)) {
        auto [neg, pos] = stack_type_i(p);
        CHECK(neg == pos.conjugate());
    }
}

TEST_CASE("literals")
{
    CHECK(parse_partition("[7,5,4,2,1,1]") == Partition({7, 5, 4, 2, 1, 1}));
    CHECK(parse_partition("[]") == Partition());
    CHECK(parse_frobenius("(6,3,1|5,2,0)") == Frobenius{{6, 3, 1}, {5, 2, 0}});
    CHECK(parse_weight("[3,3,3;0,0,0,0]").split == 3);
    CHECK(parse_weight("[3/2,-1/2]").coords[1] == half(-1));
    try {
        parse_partition("[3,x,1]");
        FAIL("no error");
    } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_weight("[1/3]"), ValidationError);
    CHECK_THROWS_AS(parse_partition("[1,2]"), ValidationError);
}
