#include "rspin/euler_class.hpp"
#include "rspin/graph.hpp"
#include "rspin/lg_frobenius.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rspin;

TEST_CASE("r1 rank examples")
{
    std::vector<int> a{1, 1, 1, 1}, b{2, 2, 2, 2}, c{0, 0, 0}, ramond{2, 0, 1, 1};
    CHECK(r1_rank(3, a).rank == 1);
    CHECK(r1_rank(5, b).rank == 1);
    CHECK(r1_rank(2, c).rank == 0);
    CHECK(r1_rank(3, ramond).ramond_zero);

    std::vector<int> empty{1, 1, 1};
    CHECK_THROWS_WITH_AS(r1_rank(3, empty), doctest::Contains("not concave"), NotConcaveError);
    CHECK_THROWS_AS(concave_data(3, ramond), NotConcaveError);
}

TEST_CASE("rank equals virtual dimension on concave cases")
{
    std::mt19937 rng(11);
    int tested = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        int r = 2 + static_cast<int>(rng() % 6);
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<int> m(n);
        for (auto& x : m)
            x = static_cast<int>(rng() % (r - 1));
        if (!selection_nonempty(r, 0, [&] {
                std::vector<int> k;
                for (int x : m)
                    k.push_back((x + 1) % r);
                return k;
            }()))
            continue;
        if (bundle_degree(r, 0, m, Twist::Canonical) >= 0)
            continue;
        ConcaveData d = concave_data(r, m);
        CHECK(d.rank_r1 == -d.bundle_degree - 1);
        CHECK(Rational(d.rank_r1) == virtual_dim(r, 0, 1, m).D);
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("four-point class degree examples")
{
    std::vector<int> a{1, 1, 1, 1}, b{1, 1, 2, 2}, c{2, 2, 2, 2};
    CHECK(four_point_class_degree(3, a) == frac(1, 3));
    CHECK(four_point_class_degree(4, b) == frac(1, 4));
    CHECK(four_point_class_degree(5, c) == frac(2, 5));

    std::vector<int> r2{0, 0, 1, 1};
    CHECK(four_point_class_degree(2, r2) == 0); // sum 2 forces a Ramond entry
    std::vector<int> ramond{2, 2, 0, 0};
    CHECK(four_point_class_degree(3, ramond) == 0);

    std::vector<int> wrong{1, 1, 1, 0};
    CHECK_THROWS_WITH_AS(four_point_class_degree(3, wrong), doctest::Contains("not a four-point top-degree case"),
                         DomainError);
    std::vector<int> three{1, 1, 1};
    CHECK_THROWS_AS(four_point_class_degree(3, three), DomainError);
}

TEST_CASE("four-point class degree is S4 invariant")
{
    for (int r = 3; r <= 7; ++r)
        for (auto tuple : admissible_four_tuples(r)) {
            std::vector<int> m(tuple.begin(), tuple.end());
            Rational ref = four_point_class_degree(r, m);
            std::sort(m.begin(), m.end());
            do
                CHECK(four_point_class_degree(r, m) == ref);
            while (std::next_permutation(m.begin(), m.end()));
        }
}

TEST_CASE("dual-engine agreement with the residue prepotential")
{
    // r = 3 calibrates the conventions; r = 4..6 validate them.
    for (int r = 3; r <= 6; ++r) {
        const Prepotential& p = prepotential(r);
        for (const auto& row : four_point_table(r)) {
            std::vector<int> m(row.m.begin(), row.m.end());
            CHECK(row.value == p.correlator(m));
        }
    }
}

TEST_CASE("bernoulli polynomial")
{
    CHECK(bernoulli2(Rational(0)) == frac(1, 6));
    CHECK(bernoulli2(frac(1, 2)) == frac(-1, 12));
    CHECK(bernoulli2(frac(1, 3)) == bernoulli2(frac(2, 3)));
}

TEST_CASE("admissible tuples")
{
    CHECK(admissible_four_tuples(2).empty());
    CHECK(admissible_four_tuples(3).size() == 1);
    for (int r = 3; r <= 7; ++r)
        for (auto t : admissible_four_tuples(r)) {
            CHECK(t[0] + t[1] + t[2] + t[3] == 2 * r - 2);
            CHECK(std::is_sorted(t.begin(), t.end()));
            CHECK(t[3] <= r - 2);
        }
}
