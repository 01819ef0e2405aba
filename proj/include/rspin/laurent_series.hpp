#pragma once

#include "rspin/polynomial.hpp"

#include <climits>
#include <map>

namespace rspin {

class InsufficientWindow : public DomainError {
  public:
    using DomainError::DomainError;
};

// Truncated Laurent series in one variable x with polynomial coefficients.
// Every coefficient at exponent >= lo() is exact; nothing below lo() is kept,
// and asking for it throws InsufficientWindow.
class LaurentSeries {
  public:
    static constexpr int kExact = INT_MIN / 4;

    LaurentSeries(std::size_t nvars, int lo = kExact) : nvars_(nvars), lo_(lo) {}

    static LaurentSeries term(int exponent, const Polynomial& coeff, int lo = kExact);

    std::size_t nvars() const { return nvars_; }
    int lo() const { return lo_; }
    bool exact() const { return lo_ == kExact; }
    // Highest exponent carrying a nonzero coefficient; lo() - 1 for the zero series.
    int top() const;

    Polynomial coefficient(int exponent) const;
    const std::map<int, Polynomial>& terms() const { return terms_; }

    void add_term(int exponent, const Polynomial& coeff);

    LaurentSeries shifted(int k) const;
    LaurentSeries truncated(int lo) const;
    LaurentSeries multiply(const LaurentSeries& other) const;
    LaurentSeries& operator+=(const LaurentSeries& other);
    LaurentSeries& operator*=(const Rational& c);

    // (1 + y)^alpha for y with top() <= -1, kept down to exponent lo.
    static LaurentSeries binomial_power(const LaurentSeries& y, const Rational& alpha, int lo);

  private:
    std::size_t nvars_;
    int lo_;
    std::map<int, Polynomial> terms_;
};

} // namespace rspin
