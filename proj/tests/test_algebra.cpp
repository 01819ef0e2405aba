#include "rspin/laurent_series.hpp"
#include "rspin/polynomial.hpp"
#include "rspin/rational.hpp"

#include <doctest.h>

using namespace rspin;

TEST_CASE("rationals print in lowest terms and parse back")
{
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("10/4") == frac(5, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(frac(1, 0), DomainError);
    for (int n = -12; n <= 12; ++n)
        for (int d = 1; d <= 12; ++d)
            CHECK(parse_rational(to_string(frac(n, d))) == frac(n, d));
}

TEST_CASE("factorial and exponent factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(exponent_factorial({2, 0, 3}) == 12);
}

TEST_CASE("polynomial ring operations")
{
    auto x = Polynomial::variable(2, 0);
    auto y = Polynomial::variable(2, 1);
    Polynomial p = x * x + y * frac(1, 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.min_degree() == 1);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.derivative(0) == x * Rational(2));
    CHECK((p - p).is_zero());
    CHECK((p - p).total_degree() == -1);
    CHECK(p.truncated(1) == y * frac(1, 2));
    CHECK(p.multiply(p, 3).total_degree() == 3);
    CHECK(p.to_string() == "1/2*t1 + t0^2");

    // compose: substitute x -> x + y, y -> 2
    std::vector<Polynomial> vals{x + y, Polynomial::constant(2, 2)};
    CHECK(p.compose(vals) == x * x + x * y * Rational(2) + y * y + Polynomial::constant(2, 1));
    CHECK(p.compose(vals, 1) == Polynomial::constant(2, 1));

    std::vector<Rational> w{Rational(1), frac(1, 2)};
    auto degs = (x * y).weighted_degrees(w);
    REQUIRE(degs.size() == 1);
    CHECK(degs.front() == frac(3, 2));
}

TEST_CASE("zero coefficients are never stored")
{
    Polynomial p(1);
    p.add_term({1}, 3);
    p.add_term({1}, -3);
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
}

TEST_CASE("laurent series binomial powers")
{
    // (1 + x^-1)^{1/2} = 1 + x^-1/2 - x^-2/8 + x^-3/16 - ...
    LaurentSeries y(0);
    y.add_term(-1, Polynomial::constant(0, 1));
    auto root = LaurentSeries::binomial_power(y, frac(1, 2), -3);
    CHECK(root.coefficient(0).constant_term() == 1);
    CHECK(root.coefficient(-1).constant_term() == frac(1, 2));
    CHECK(root.coefficient(-2).constant_term() == frac(-1, 8));
    CHECK(root.coefficient(-3).constant_term() == frac(1, 16));
    CHECK_THROWS_AS(root.coefficient(-4), InsufficientWindow);

    // squaring recovers 1 + x^-1 on the exact part of the window
    auto sq = root.multiply(root);
    CHECK(sq.coefficient(0).constant_term() == 1);
    CHECK(sq.coefficient(-1).constant_term() == 1);
    CHECK(sq.coefficient(-2).is_zero());
    CHECK(sq.coefficient(-3).is_zero());

    CHECK_THROWS_AS(LaurentSeries::binomial_power(y, frac(1, 2), LaurentSeries::kExact), InsufficientWindow);
}

TEST_CASE("window bookkeeping never reads below lo")
{
    LaurentSeries a = LaurentSeries::term(2, Polynomial::constant(0, 1), -1);
    LaurentSeries b = LaurentSeries::term(1, Polynomial::constant(0, 1), 0);
    auto c = a.multiply(b);
    CHECK(c.coefficient(3).constant_term() == 1);
    // lowest trustworthy exponent is max(-1 + 1, 0 + 2) = 2
    CHECK(c.lo() == 2);
    CHECK_THROWS_AS(c.coefficient(1), InsufficientWindow);
}
