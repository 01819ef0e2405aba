#include "rspin/euler_class.hpp"

#include "rspin/graph.hpp"
#include "rspin/state_space.hpp"

#include <numeric>

namespace rspin {

namespace {

// Convention constants of the GRR expansion, fixed once against the r = 3
// value <x_1^4> and then held for every other r:
//  - the r^{1-g} factor of the CohFT cancels the 1/r degree of the spin
//    moduli over the coarse space, so the smooth part enters with weight 1;
//  - each boundary point carries the node factor r/2 of the formula, the
//    extra 1/r of its ghost automorphisms, and both branch orderings.
const Rational kOverall = 1;
const Rational kNodeWeight = 1;

int mod(int a, int r) { return ((a % r) + r) % r; }

} // namespace

Rational bernoulli2(const Rational& x)
{
    Rational b = x * x - x + frac(1, 6);
    b.canonicalize();
    return b;
}

RankResult r1_rank(int r, std::span<const int> m)
{
    for (int x : m)
        if (normalize_label(r, x) == r - 1)
            return {true, 0};
    ConcaveData d = concave_data(r, m);
    return {false, d.rank_r1};
}

ConcaveData concave_data(int r, std::span<const int> m)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    if (m.size() < 3)
        throw DomainError("genus-0 data needs at least three markings");
    ConcaveData d;
    d.r = r;
    for (int x : m) {
        int mm = normalize_label(r, x);
        if (mm < 0 || mm > r - 2)
            throw NotConcaveError("not concave: marking m = " + std::to_string(x) + " is not Neveu-Schwarz");
        d.m.push_back(mm);
    }
    d.bundle_degree = bundle_degree(r, 0, d.m, Twist::Canonical);
    if (!is_integer(d.bundle_degree))
        throw NotConcaveError("not concave: selection rule fails, the moduli space is empty");
    if (d.bundle_degree >= 0)
        throw NotConcaveError("not concave: bundle degree is non-negative");
    d.rank_r1 = static_cast<int>(-d.bundle_degree.get_num().get_si() - 1);
    return d;
}

Rational four_point_class_degree(int r, std::span<const int> m)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    if (m.size() != 4)
        throw DomainError("not a four-point top-degree case: need exactly four markings");
    std::array<int, 4> mm{};
    for (int i = 0; i < 4; ++i) {
        mm[i] = normalize_label(r, m[i]);
        if (mm[i] < 0 || mm[i] > r - 1)
            throw DomainError("marking out of range");
    }
    for (int x : mm)
        if (x == r - 1)
            return 0;
    if (std::accumulate(mm.begin(), mm.end(), 0) != 2 * r - 2)
        throw DomainError("not a four-point top-degree case: need sum m = 2r-2 (D = 1)");

    // ch_1(R pi_* L) with L^r = omega_log(-sum (m_i+1) p_i): kappa_1 and every
    // psi_i integrate to 1, each of the three boundary points to 1.
    Rational value = bernoulli2(frac(1, r)) / 2;
    for (int x : mm)
        value -= bernoulli2(frac(x + 1, r)) / 2;
    const std::array<std::array<int, 2>, 3> channels{{{0, 1}, {0, 2}, {0, 3}}};
    for (auto [i, j] : channels) {
        int m_plus = mod(r - 2 - mm[i] - mm[j], r);
        Rational q(mod(m_plus + 1, r), r);
        q.canonicalize();
        value += kNodeWeight * bernoulli2(q) / 2;
    }
    // c^{1/r} = (-1)^D c_D(R^1 pi_* L) = ch_1(R pi_* L) for D = 1.
    value *= kOverall;
    value.canonicalize();
    return value;
}

std::vector<std::array<int, 4>> admissible_four_tuples(int r)
{
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a <= r - 2; ++a)
        for (int b = a; b <= r - 2; ++b)
            for (int c = b; c <= r - 2; ++c) {
                int d = 2 * r - 2 - a - b - c;
                if (d >= c && d <= r - 2)
                    out.push_back({a, b, c, d});
            }
    return out;
}

std::vector<FourPointRow> four_point_table(int r)
{
    std::vector<FourPointRow> rows;
    for (const auto& t : admissible_four_tuples(r))
        rows.push_back({t, four_point_class_degree(r, t)});
    return rows;
}

} // namespace rspin
