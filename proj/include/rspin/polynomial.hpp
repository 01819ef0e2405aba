#pragma once

#include "rspin/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rspin {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Terms with zero coefficient are never stored.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;
    void add_term(const Exponents& e, const Rational& c);

    // -1 for the zero polynomial.
    int total_degree() const;
    int min_degree() const;

    Polynomial derivative(std::size_t index) const;
    Polynomial truncated(int max_degree) const;
    // Weighted degree sum_i e_i * weight_i for every term must lie in the result.
    std::vector<Rational> weighted_degrees(std::span<const Rational> weights) const;

    // Product keeping only terms of total degree <= max_degree (no cap when negative).
    Polynomial multiply(const Polynomial& other, int max_degree = -1) const;

    // Substitute values[i] for variable i; result lives in values' ring.
    Polynomial compose(std::span<const Polynomial> values, int max_degree = -1) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Human-readable form, e.g. "1/2*t0^2*t1 + 1/72*t1^4".
    std::string to_string(const std::function<std::string(std::size_t)>& name) const;
    std::string to_string(const std::string& prefix = "t") const;

  private:
    void check_ring(const Polynomial& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

Exponents unit_exponents(std::size_t nvars, std::size_t index);
int degree_of(const Exponents& e);
// prod_i e_i!
Rational exponent_factorial(const Exponents& e);

} // namespace rspin
