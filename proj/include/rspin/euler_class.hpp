#pragma once

#include "rspin/rational.hpp"

#include <array>
#include <span>
#include <vector>

namespace rspin {

struct ConcaveData {
    int r = 2;
    std::vector<int> m;
    Rational bundle_degree;
    int rank_r1 = 0;
};

class NotConcaveError : public DomainError {
  public:
    using DomainError::DomainError;
};

struct RankResult {
    bool ramond_zero = false; // Ramond insertion: the class vanishes outright
    int rank = 0;
};

// Genus-0 Riemann-Roch: rank R^1 pi_* L = -deg L - 1 when H^0 vanishes.
RankResult r1_rank(int r, std::span<const int> m);
ConcaveData concave_data(int r, std::span<const int> m);

// B_2(x) = x^2 - x + 1/6.
Rational bernoulli2(const Rational& x);

// Integral over the four-pointed genus-0 space of the degree-1 virtual class,
// normalised as a primary correlator. Returns 0 for any Ramond insertion.
Rational four_point_class_degree(int r, std::span<const int> m);

struct FourPointRow {
    std::array<int, 4> m;
    Rational value;
};

// Non-decreasing Neveu-Schwarz 4-tuples with sum 2r-2.
std::vector<std::array<int, 4>> admissible_four_tuples(int r);
std::vector<FourPointRow> four_point_table(int r);

} // namespace rspin
