#include "rspin/lg_frobenius.hpp"

#include "rspin/state_space.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace rspin {

namespace {

void require_r(int r)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    if (r > kMaxPotentialR)
        throw ScaleLimitError("scale limit: prepotential supported for r <= " + std::to_string(kMaxPotentialR));
}

std::vector<Polynomial> variables(std::size_t n)
{
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(Polynomial::variable(n, i));
    return v;
}

std::size_t flat_index(std::size_t dim, std::size_t a, std::size_t b, std::size_t c)
{
    return (a * dim + b) * dim + c;
}

} // namespace

DeformedPotential::DeformedPotential(int r_) : r(r_) { require_r(r_); }

LaurentSeries DeformedPotential::series(std::span<const Polynomial> s) const
{
    if (s.size() != num_parameters())
        throw DomainError("deformed potential needs r-1 parameters");
    std::size_t nv = s.front().nvars();
    LaurentSeries w = LaurentSeries::term(r, Polynomial::constant(nv, 1));
    for (int j = 0; j <= r - 2; ++j)
        w.add_term(j, s[j]);
    return w;
}

LaurentSeries DeformedPotential::derivative_series(std::span<const Polynomial> s) const
{
    if (s.size() != num_parameters())
        throw DomainError("deformed potential needs r-1 parameters");
    std::size_t nv = s.front().nvars();
    LaurentSeries w = LaurentSeries::term(r - 1, Polynomial::constant(nv, r));
    for (int j = 1; j <= r - 2; ++j)
        w.add_term(j - 1, s[j] * Rational(j));
    return w;
}

FlatCoordinates flat_coordinates(int r)
{
    require_r(r);
    const std::size_t n = static_cast<std::size_t>(r - 1);
    const auto s = variables(n);

    // W = x^r (1 + y), y = sum_j s_j x^{j-r}.
    LaurentSeries y(n);
    for (int j = 0; j <= r - 2; ++j)
        y.add_term(j - r, s[j]);

    FlatCoordinates out;
    out.r = r;
    for (int m = 0; m <= r - 2; ++m) {
        int p = r - 1 - m;
        // x^p (1+y)^{p/r}: the x^{-1} coefficient needs exponents down to -1-p.
        LaurentSeries root = LaurentSeries::binomial_power(y, frac(p, r), -1 - p);
        Polynomial residue = root.shifted(p).coefficient(-1);
        out.t_of_s.push_back(residue * frac(r, p));
    }

    // Invert t = s + N(s) by fixed-point iteration; the weights make it finite.
    const auto t = variables(n);
    std::vector<Polynomial> nonlinear;
    for (std::size_t j = 0; j < n; ++j)
        nonlinear.push_back(out.t_of_s[j] - s[j]);
    std::vector<Polynomial> guess = t;
    for (int iter = 0;; ++iter) {
        std::vector<Polynomial> next;
        for (std::size_t j = 0; j < n; ++j)
            next.push_back(t[j] - nonlinear[j].compose(guess));
        if (next == guess)
            break;
        guess = std::move(next);
        if (iter > 2 * r + 2)
            throw DomainError("flat coordinate inversion did not stabilise");
    }
    out.s_of_t = std::move(guess);

    for (std::size_t j = 0; j < n; ++j)
        if (out.t_of_s[j].compose(out.s_of_t) != t[j])
            throw DomainError("flat coordinate inverse failed to round-trip");
    return out;
}

ThreePointFunctions::ThreePointFunctions(int r, std::vector<Polynomial> values) : r_(r), values_(std::move(values))
{
    if (values_.size() != dim() * dim() * dim())
        throw DomainError("three-point table has the wrong size");
}

const Polynomial& ThreePointFunctions::operator()(std::size_t a, std::size_t b, std::size_t c) const
{
    if (a >= dim() || b >= dim() || c >= dim())
        throw DomainError("three-point index out of range");
    return values_[flat_index(dim(), a, b, c)];
}

int default_residue_window(int r) { return -2 * (r - 2); }

ThreePointFunctions three_point_functions(int r, Branch branch, std::optional<int> window)
{
    require_r(r);
    const std::size_t n = static_cast<std::size_t>(r - 1);
    const FlatCoordinates flat = flat_coordinates(r);
    const int lo = window.value_or(default_residue_window(r));

    // 1/W' = x^{1-r}/r * (1 + u)^{-1}
    DeformedPotential w(r);
    LaurentSeries wprime = w.derivative_series(flat.s_of_t);
    LaurentSeries u(n);
    for (const auto& [e, c] : wprime.terms())
        if (e != r - 1)
            u.add_term(e - (r - 1), c * frac(1, r));
    LaurentSeries inverse =
        LaurentSeries::binomial_power(u, Rational(-1), std::min(lo, 0)).shifted(1 - r);
    inverse *= frac(1, r);

    // phi_a = dW/dt_a as polynomials in x.
    std::vector<LaurentSeries> phi;
    for (std::size_t a = 0; a < n; ++a) {
        LaurentSeries f(n);
        for (int j = 0; j <= r - 2; ++j)
            f.add_term(j, flat.s_of_t[j].derivative(a));
        phi.push_back(std::move(f));
    }

    std::vector<Polynomial> values(n * n * n, Polynomial(n));
    const auto minus_t = [&] {
        std::vector<Polynomial> v = variables(n);
        for (auto& p : v)
            p = -p;
        return v;
    }();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            LaurentSeries ab = phi[a].multiply(phi[b]);
            for (std::size_t c = b; c < n; ++c) {
                LaurentSeries integrand = ab.multiply(phi[c]).multiply(inverse);
                Polynomial value;
                try {
                    value = integrand.coefficient(-1) * Rational(r);
                } catch (const InsufficientWindow& e) {
                    throw InsufficientWindow(std::string("residue denominator expansion too short: ") + e.what());
                }
                if (branch == Branch::Geometric)
                    value = value.compose(minus_t);
                for (auto [i, j, k] : {std::array{a, b, c}, std::array{a, c, b}, std::array{b, a, c},
                                       std::array{b, c, a}, std::array{c, a, b}, std::array{c, b, a}})
                    values[flat_index(n, i, j, k)] = value;
            }
        }
    return ThreePointFunctions(r, std::move(values));
}

Polynomial Prepotential::third_derivative(std::size_t a, std::size_t b, std::size_t c) const
{
    return F.derivative(a).derivative(b).derivative(c);
}

Rational Prepotential::correlator(std::span<const int> m) const
{
    Exponents e(dim(), 0);
    for (int x : m) {
        if (x < 0 || x > r - 2)
            throw DomainError("primary correlator labels must be Neveu-Schwarz");
        ++e[x];
    }
    return F.coefficient(e) * exponent_factorial(e);
}

std::vector<Rational> Prepotential::weights() const
{
    std::vector<Rational> w;
    for (int m = 0; m <= r - 2; ++m) {
        Rational x = 1 - frac(m, r);
        x.canonicalize();
        w.push_back(x);
    }
    return w;
}

Prepotential integrate_prepotential(const ThreePointFunctions& c)
{
    const std::size_t n = c.dim();
    // Integrability: d_d c_abc symmetric in all four indices.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t cc = b; cc < n; ++cc)
                for (std::size_t d = 0; d < n; ++d)
                    if (c(a, b, cc).derivative(d) != c(d, b, cc).derivative(a))
                        throw DomainError("non-integrable three-point functions at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(cc) + "," + std::to_string(d) + ")");

    Prepotential p;
    p.r = c.r();
    p.F = Polynomial(n);
    std::map<Exponents, Rational> coeffs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t cc = b; cc < n; ++cc)
                for (const auto& [e, v] : c(a, b, cc).terms()) {
                    Exponents full = e;
                    ++full[a];
                    ++full[b];
                    ++full[cc];
                    Rational coeff = v * exponent_factorial(e) / exponent_factorial(full);
                    auto [it, inserted] = coeffs.emplace(full, coeff);
                    if (!inserted && it->second != coeff)
                        throw DomainError("non-integrable three-point functions: inconsistent coefficient");
                }
    for (const auto& [e, v] : coeffs)
        p.F.add_term(e, v);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t cc = b; cc < n; ++cc)
                if (p.third_derivative(a, b, cc) != c(a, b, cc))
                    throw DomainError("integrated prepotential does not reproduce c_abc");
    return p;
}

Prepotential prepotential(int r, Branch branch)
{
    return integrate_prepotential(three_point_functions(r, branch));
}

const Prepotential& prepotential(int r)
{
    require_r(r);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const Prepotential>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[r];
    if (!slot)
        slot = std::make_unique<const Prepotential>(prepotential(r, Branch::Geometric));
    return *slot;
}

Polynomial wdvv_contraction(const Prepotential& p, int a, int b, int c, int d)
{
    Polynomial sum(p.dim());
    for (int e = 0; e <= p.r - 2; ++e)
        sum += p.third_derivative(a, b, e) * p.third_derivative(p.r - 2 - e, c, d);
    return sum;
}

std::optional<WdvvFailure> wdvv_violation(const Prepotential& p)
{
    const int n = static_cast<int>(p.dim());
    std::vector<Polynomial> third(n * n * n, Polynomial(p.dim()));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                third[flat_index(n, a, b, c)] = p.third_derivative(a, b, c);
    auto contraction = [&](int a, int b, int c, int d) {
        Polynomial sum(p.dim());
        for (int e = 0; e < n; ++e)
            sum += third[flat_index(n, a, b, e)] * third[flat_index(n, n - 1 - e, c, d)];
        return sum;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (contraction(a, b, c, d) != contraction(a, c, b, d))
                        return WdvvFailure{a, b, c, d};
    return std::nullopt;
}

} // namespace rspin
