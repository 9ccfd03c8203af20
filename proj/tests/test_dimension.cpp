#include <doctest.h>

#include <random>

#include "hermitian/dimension.hpp"
#include "oracles.hpp"

using namespace hermitian;

TEST_CASE("dimension examples")
{
    CHECK(dim_partition(Partition({2, 1, 1}), 4) == 15);
    for (int n = 1; n <= 6; n++)
        CHECK(dim_partition(Partition({1}), n) == n);
    CHECK(dim_partition(Partition({2, 1}), 3) == oracle::ssyt_count(Partition({2, 1}), 3));
    CHECK(dim_partition(Partition({2, 1}), 3) == 8);
    CHECK(dim_partition(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("dimension equals the number of semistandard tableaux")
{
    for (auto &p : enumerate_shapes(ShapeFamily::box(8, 8))) {
        if (p.size() > 8)
            continue;
        for (int n = 1; n <= 5; n++)
            CHECK(dim_partition(p, n) == oracle::ssyt_count(p, n));
    }
}

TEST_CASE("dominant weights with negative or half entries")
{
    CHECK(dim_gl(std::vector<long>{0, 0, -1}) == 3);
    CHECK(dim_gl(std::vector<long>{-1, -1, -2, -3}) == dim_partition(Partition({2, 2, 1}), 4));
    std::vector<HalfInt> halves = {half(3), half(1), half(-1)};
    CHECK(dim_gl(halves) == dim_partition(Partition({2, 1}), 3));
    CHECK_THROWS_AS(dim_gl(std::vector<long>{0, 1}), ValidationError);
    CHECK_THROWS_AS(dim_gl(std::vector<HalfInt>{half(1), HalfInt(0)}), ValidationError);
}

TEST_CASE("dimension is invariant under adding a constant")
{
    for (auto &p : enumerate_shapes(ShapeFamily::box(4, 4)))
        for (int c = -5; c <= 5; c++) {
            std::vector<long> v(4);
            for (int i = 0; i < 4; i++)
                v[i] = p.at(i) + c;
            CHECK(dim_gl(v) == dim_partition(p, 4));
        }
}

TEST_CASE("two-block identity examples")
{
    auto r = verify_two_block({0}, {0}, 3, 3, 1);
    CHECK(r.lhs == 36);
    CHECK(r.rhs == 36);
    CHECK(r.equal);
    CHECK(r.lhs_x == Partition({2}));
    CHECK(r.rhs_x == Partition({1, 1}));
    auto z = verify_two_block({2, 0}, {1, 0}, 3, 3, 0);
    CHECK(z.lhs == z.rhs);
    CHECK(verify_two_block({1}, {1}, 3, 3, 1).equal);
    CHECK_THROWS_AS(verify_two_block({3}, {0}, 2, 2, 1), ValidationError);
}

TEST_CASE("two-block identity on a full sweep")
{
    int cases = 0;
    for (auto &pi : enumerate_shapes(ShapeFamily::box(4, 4))) {
        Frobenius f = frobenius(pi);
        for (int p = 4; p <= 6; p++)
            for (int q = 4; q <= 6; q++)
                for (int m = 0; m <= 3; m++) {
                    CHECK(verify_two_block(f.arms, f.legs, p, q, m).equal);
                    cases++;
                }
    }
    CHECK(cases == 70 * 9 * 4);
}

TEST_CASE("conjugate dimension examples")
{
    auto r = verify_conjugate(Partition({4, 4, 4}), 1, 3);
    CHECK(r.core.has_value());
    CHECK(r.rows[2].dim_shape == 1);
    CHECK(r.rows[2].dim_conjugate == 1);
    CHECK(dim_partition(Partition({3, 3, 3, 3}), 4) == 1);

    auto w = verify_conjugate(Partition({2, 2}), 1, 8);
    CHECK_FALSE(w.core.has_value());
    CHECK(w.rows[2].dim_shape == 6);
    CHECK(w.rows[2].dim_conjugate == 20);
    /* n = 1 already separates them: 0 against dim F_(2,2)^2 = 1 */
    CHECK(w.least_witness == 1);

    auto t = verify_conjugate(Partition({3}), 2, 2);
    CHECK(t.rows[1].dim_shape == 4);
    CHECK(dim_partition(Partition({1, 1, 1}), 4) == 4);
    CHECK(t.all_equal);
}

TEST_CASE("conjugate dimensions agree on every (alpha+m|alpha)")
{
    for (auto &alpha : enumerate_shapes(ShapeFamily::box(5, 5))) {
        if (!Partition({5, 4, 3, 2, 1}).contains(alpha))
            continue;
        std::vector<int> a = alpha.parts();
        bool strict = true;
        for (std::size_t i = 0; i + 1 < a.size(); i++)
            strict = strict && a[i] > a[i + 1];
        if (!strict)
            continue;
        /* both with and without a trailing zero part */
        for (bool zero : {false, true}) {
            std::vector<int> core = a;
            if (zero)
                core.push_back(0);
            for (int m = 0; m <= 3; m++) {
                auto r = verify_conjugate(from_frobenius(add_constant(core, m), core), m, 8);
                CHECK(r.all_equal);
                CHECK_FALSE(r.least_witness.has_value());
            }
        }
    }
}

TEST_CASE("shapes not of the form have a witness")
{
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> part(0, 6);
    int found = 0, trial = 0;
    while (trial < 100) {
        std::vector<int> v(4);
        for (int &x : v)
            x = part(gen);
        std::sort(v.rbegin(), v.rend());
        Partition p(v);
        for (int m = 0; m <= 2; m++) {
            if (asc_core(p, m))
                continue;
            trial++;
            found += verify_conjugate(p, m, 8).least_witness.has_value();
        }
    }
    CHECK(found == trial);
}

TEST_CASE("principal specialization examples")
{
    CHECK(to_string(principal_specialization(Partition({1}), 2)) == "q + q^-1");
    auto a = principal_specialization(Partition({2}), 2);
    auto b = principal_specialization(Partition({1, 1}), 3);
    CHECK(a == b);
    CHECK(a == LaurentPoly{{2, 1}, {0, 1}, {-2, 1}});
    mpz_class at_one = 0;
    for (auto &[e, c] : principal_specialization(Partition({2, 1}), 3))
        at_one += c;
    CHECK(at_one == 8);
}

TEST_CASE("principal specialization at q=1 and the shifted pair identity")
{
    for (auto &p : enumerate_shapes(ShapeFamily::box(4, 4)))
        for (int n = 1; n <= 5; n++) {
            mpz_class s = 0;
            for (auto &[e, c] : principal_specialization(p, n))
                s += c;
            CHECK(s == dim_partition(p, n));
        }
    for (auto &alpha : strict_subsets(0, 3)) {
        if (!Partition({3, 2, 1}).contains(Partition(alpha)))
            continue;
        for (int m = 0; m <= 2; m++) {
            Partition p = from_frobenius(add_constant(alpha, m), alpha);
            for (int n = 1; n <= 5; n++)
                CHECK(principal_specialization(p, n) ==
                      principal_specialization(p.conjugate(), n + m));
        }
    }
}

TEST_CASE("ASC dimensions sum to 2^(n(n+1)/2)")
{
    for (int n = 1; n <= 5; n++) {
        mpz_class s = 0;
        for (auto &p : enumerate_shapes(ShapeFamily::asc(n, 1)))
            s += dim_partition(p, n);
        CHECK(s == mpz_class(1) << (n * (n + 1) / 2));
    }
}
