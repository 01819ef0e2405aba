#include "rspin/laurent_series.hpp"

#include <algorithm>

namespace rspin {

LaurentSeries LaurentSeries::term(int exponent, const Polynomial& coeff, int lo)
{
    LaurentSeries s(coeff.nvars(), lo);
    s.add_term(exponent, coeff);
    return s;
}

int LaurentSeries::top() const { return terms_.empty() ? lo_ - 1 : terms_.rbegin()->first; }

Polynomial LaurentSeries::coefficient(int exponent) const
{
    if (exponent < lo_)
        throw InsufficientWindow("insufficient window: coefficient of x^" + std::to_string(exponent) +
                                 " requested, series known only down to x^" + std::to_string(lo_));
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void LaurentSeries::add_term(int exponent, const Polynomial& coeff)
{
    if (exponent < lo_ || coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentSeries LaurentSeries::shifted(int k) const
{
    LaurentSeries out(nvars_, exact() ? kExact : lo_ + k);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e + k, c);
    return out;
}

LaurentSeries LaurentSeries::truncated(int lo) const
{
    LaurentSeries out(nvars_, std::max(lo, lo_));
    for (const auto& [e, c] : terms_)
        if (e >= out.lo_)
            out.terms_.emplace(e, c);
    return out;
}

LaurentSeries LaurentSeries::multiply(const LaurentSeries& other) const
{
    int lo = kExact;
    if (!exact())
        lo = std::max(lo, lo_ + std::max(other.top(), other.exact() ? kExact : other.lo_));
    if (!other.exact())
        lo = std::max(lo, other.lo_ + std::max(top(), exact() ? kExact : lo_));
    LaurentSeries out(nvars_, lo);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            if (ea + eb >= lo)
                out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other)
{
    lo_ = std::max(lo_, other.lo_);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first < lo_ ? terms_.erase(it) : std::next(it);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

LaurentSeries LaurentSeries::binomial_power(const LaurentSeries& y, const Rational& alpha, int lo)
{
    if (y.top() > -1)
        throw DomainError("binomial_power: expansion variable must have negative order");
    if (lo == kExact)
        throw InsufficientWindow("binomial_power: an explicit truncation window is required");
    std::size_t nv = y.nvars();
    LaurentSeries sum = term(0, Polynomial::constant(nv, 1), lo);
    LaurentSeries power = term(0, Polynomial::constant(nv, 1)).truncated(lo);
    Rational binom = 1;
    for (int k = 1;; ++k) {
        power = power.multiply(y).truncated(lo);
        if (power.terms().empty())
            break;
        binom *= (alpha - (k - 1));
        binom /= k;
        LaurentSeries scaled = power;
        scaled *= binom;
        sum += scaled;
    }
    return sum.truncated(std::max(lo, y.exact() ? kExact : y.lo()));
}

} // namespace rspin
