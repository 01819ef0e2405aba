#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rspin {

using Rational = mpq_class;
using Integer = mpz_class;

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Raised whenever a request exceeds the desk-scale bounds of an engine.
class ScaleLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p" or "p/q"; throws DomainError on anything else.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// n/d in lowest terms with a positive denominator.
Rational frac(long n, long d);

Rational factorial(int n);

} // namespace rspin
