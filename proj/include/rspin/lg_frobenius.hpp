#pragma once

#include "rspin/laurent_series.hpp"
#include "rspin/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rspin {

// W(x; s) = x^r + sum_{j=0}^{r-2} s_j x^j.
struct DeformedPotential {
    int r = 2;

    explicit DeformedPotential(int r);
    std::size_t num_parameters() const { return static_cast<std::size_t>(r - 1); }
    // Coefficients of W as polynomials in the ring of the given parameter values.
    LaurentSeries series(std::span<const Polynomial> s) const;
    LaurentSeries derivative_series(std::span<const Polynomial> s) const;
};

struct FlatCoordinates {
    int r = 2;
    std::vector<Polynomial> t_of_s; // ring s_0..s_{r-2}
    std::vector<Polynomial> s_of_t; // ring t_0..t_{r-2}
};

// t_m = r/(r-1-m) * [x^-1] W^{(r-1-m)/r}, expanded at x = infinity.
FlatCoordinates flat_coordinates(int r);

// The residue construction has a two-fold ambiguity F(t) <-> -F(-t) that
// preserves both the pairing and the cubic term. Geometric is the branch whose
// four-point values agree with the Euler-class engine; Residue is the raw one.
enum class Branch { Geometric, Residue };

class ThreePointFunctions {
  public:
    ThreePointFunctions(int r, std::vector<Polynomial> values);

    int r() const { return r_; }
    std::size_t dim() const { return static_cast<std::size_t>(r_ - 1); }
    const Polynomial& operator()(std::size_t a, std::size_t b, std::size_t c) const;

  private:
    int r_;
    std::vector<Polynomial> values_;
};

// Lowest exponent of (1 + u)^{-1} needed for every triple product; u from W'.
int default_residue_window(int r);

ThreePointFunctions three_point_functions(int r, Branch branch = Branch::Geometric,
                                          std::optional<int> window = std::nullopt);

struct Prepotential {
    int r = 2;
    Polynomial F;

    std::size_t dim() const { return static_cast<std::size_t>(r - 1); }
    Polynomial third_derivative(std::size_t a, std::size_t b, std::size_t c) const;
    // d^n F / dt_{m_1} ... dt_{m_n} at t = 0; labels must be Neveu-Schwarz.
    Rational correlator(std::span<const int> m) const;
    // weight(t_m) = 1 - m/r.
    std::vector<Rational> weights() const;
};

Prepotential integrate_prepotential(const ThreePointFunctions& c);

// Cached per r; computed once and shared.
const Prepotential& prepotential(int r);
Prepotential prepotential(int r, Branch branch);

// sum_{e} F_{abe} eta^{e f} F_{fcd}
Polynomial wdvv_contraction(const Prepotential& p, int a, int b, int c, int d);

struct WdvvFailure {
    int a, b, c, d;
};
// First index choice at which (ab|cd) != (ac|bd), if any.
std::optional<WdvvFailure> wdvv_violation(const Prepotential& p);

inline constexpr int kMaxPotentialR = 12;

} // namespace rspin
