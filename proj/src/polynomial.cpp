#include "rspin/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rspin {

Exponents unit_exponents(std::size_t nvars, std::size_t index)
{
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return e;
}

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational exponent_factorial(const Exponents& e)
{
    Rational f = 1;
    for (int k : e)
        f *= factorial(k);
    return f;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    Polynomial p(nvars);
    p.add_term(unit_exponents(nvars, index), 1);
    return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c)
{
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

void Polynomial::check_ring(const Polynomial& other) const
{
    if (other.nvars_ != nvars_)
        throw DomainError("polynomials over different variable sets");
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars_)
        throw DomainError("exponent vector has wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, degree_of(e));
    return d;
}

int Polynomial::min_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int k = degree_of(e);
        d = d < 0 ? k : std::min(d, k);
    }
    return d;
}

Polynomial Polynomial::derivative(std::size_t index) const
{
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0)
            continue;
        Exponents f = e;
        --f[index];
        out.terms_.emplace(std::move(f), c * e[index]);
    }
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const
{
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) <= max_degree)
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

std::vector<Rational> Polynomial::weighted_degrees(std::span<const Rational> weights) const
{
    std::vector<Rational> out;
    for (const auto& [e, c] : terms_) {
        Rational w = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            w += weights[i] * e[i];
        if (std::find(out.begin(), out.end(), w) == out.end())
            out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial Polynomial::multiply(const Polynomial& other, int max_degree) const
{
    check_ring(other);
    Polynomial out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        int da = degree_of(ea);
        for (const auto& [eb, cb] : other.terms_) {
            if (max_degree >= 0 && da + degree_of(eb) > max_degree)
                continue;
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::compose(std::span<const Polynomial> values, int max_degree) const
{
    if (values.size() != nvars_)
        throw DomainError("compose: need one value per variable");
    std::size_t target = values.empty() ? 0 : values.front().nvars();
    for (const auto& v : values)
        if (v.nvars() != target)
            throw DomainError("compose: values over different rings");

    // Power tables per variable, built lazily.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto& table = powers[i];
        if (table.empty())
            table.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(table.size()) <= k)
            table.push_back(table.back().multiply(values[i], max_degree));
        return table[k];
    };

    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i)
            if (e[i] > 0)
                term = term.multiply(power(i, e[i]), max_degree);
        out += term;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_ring(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    out *= Rational(-1);
    return out;
}

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& name) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool is_const = degree_of(e) == 0;
        bool need_star = false;
        if (mag != 1 || is_const) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            os << (need_star ? "*" : "") << name(i);
            if (e[i] > 1)
                os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::string Polynomial::to_string(const std::string& prefix) const
{
    return to_string([&](std::size_t i) { return prefix + std::to_string(i); });
}

} // namespace rspin
