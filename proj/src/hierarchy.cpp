#include "rspin/hierarchy.hpp"

#include "rspin/correlators.hpp"

#include <map>

namespace rspin {

namespace {

void require_bounds(int order, int max_a)
{
    if (order < 3 || max_a < 0)
        throw DomainError("series needs order >= 3 and a non-negative descendant bound");
    if (order > kMaxSeriesOrder || max_a > kMaxSeriesDescendant)
        throw ScaleLimitError("scale limit: series supports order <= " + std::to_string(kMaxSeriesOrder) +
                              " and descendant order <= " + std::to_string(kMaxSeriesDescendant));
}

// Polynomial with prescribed Hessian; affine part set to zero.
Polynomial integrate_hessian(const std::vector<std::vector<Polynomial>>& hessian, std::size_t nvars)
{
    for (std::size_t a = 0; a < nvars; ++a)
        for (std::size_t b = 0; b < nvars; ++b) {
            if (hessian[a][b] != hessian[b][a])
                throw DomainError("non-integrable recursion: Hessian not symmetric");
            for (std::size_t c = 0; c < nvars; ++c)
                if (hessian[a][b].derivative(c) != hessian[c][b].derivative(a))
                    throw DomainError("non-integrable recursion at (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ")");
        }
    std::map<Exponents, Rational> coeffs;
    for (std::size_t a = 0; a < nvars; ++a)
        for (std::size_t b = a; b < nvars; ++b)
            for (const auto& [e, v] : hessian[a][b].terms()) {
                Exponents full = e;
                ++full[a];
                ++full[b];
                Rational c = v * exponent_factorial(e) / exponent_factorial(full);
                auto [it, inserted] = coeffs.emplace(full, c);
                if (!inserted && it->second != c)
                    throw DomainError("non-integrable recursion: inconsistent coefficient");
            }
    Polynomial out(nvars);
    for (const auto& [e, v] : coeffs)
        out.add_term(e, v);
    return out;
}

struct Fields {
    std::vector<Polynomial> upper; // v^alpha = eta^{alpha beta} v_beta
    std::vector<Polynomial> lower; // v_beta = d^2 F0 / dt^{0,0} dt^{beta,0}
};

Fields fields(const DescendantSeries& s)
{
    Fields f;
    const int n = static_cast<int>(s.num_labels());
    Polynomial d00 = s.F0.derivative(s.var(0, 0));
    for (int b = 0; b < n; ++b)
        f.lower.push_back(d00.derivative(s.var(b, 0)));
    for (int a = 0; a < n; ++a)
        f.upper.push_back(f.lower[n - 1 - a]);
    return f;
}

} // namespace

DescendantSeries build_series(int r, int order, int max_a)
{
    require_bounds(order, max_a);
    DescendantSeries s;
    s.r = r;
    s.order = order;
    s.max_a = max_a;
    s.F0 = Polynomial(s.num_vars());
    for (const auto& key : admissible_keys(r, order, max_a * order, max_a)) {
        Rational value = descendant(key);
        if (value == 0)
            continue;
        Exponents e(s.num_vars(), 0);
        for (const auto& ins : key.insertions())
            ++e[s.var(ins.m, ins.a)];
        s.F0.add_term(e, value / exponent_factorial(e));
    }
    return s;
}

Polynomial kdv_residual(const DescendantSeries& series, const Polynomial& u)
{
    if (series.r != 2 || series.max_a < 1)
        throw DomainError("dKdV residual needs r = 2 and descendant times up to t^{0,1}");
    const int cap = series.order - 3;
    Polynomial lhs = u.derivative(series.var(0, 1));
    Polynomial rhs = u.truncated(cap).multiply(u.derivative(series.var(0, 0)).truncated(cap), cap);
    return (lhs - rhs).truncated(cap);
}

Polynomial dkdv_residual(int order)
{
    DescendantSeries s = build_series(2, order, std::min(kMaxSeriesDescendant, std::max(1, order - 3)));
    Polynomial u = s.F0.derivative(s.var(0, 0)).derivative(s.var(0, 0));
    return kdv_residual(s, u);
}

std::vector<std::vector<Polynomial>> hamiltonian_densities(const Prepotential& p, int max_a)
{
    const std::size_t n = p.dim();
    const int top = static_cast<int>(n) - 1;
    // c_{alpha beta}^eps = c_{alpha beta (r-2-eps)}
    std::vector<Polynomial> third(n * n * n, Polynomial(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e)
                third[(a * n + b) * n + e] = p.third_derivative(a, b, top - e);

    std::vector<std::vector<Polynomial>> theta(n);
    for (std::size_t mu = 0; mu < n; ++mu) {
        theta[mu].push_back(Polynomial::variable(n, top - mu));
        for (int a = 1; a <= max_a; ++a) {
            const Polynomial& prev = theta[mu].back();
            std::vector<Polynomial> grad;
            for (std::size_t e = 0; e < n; ++e)
                grad.push_back(prev.derivative(e));
            std::vector<std::vector<Polynomial>> hessian(n, std::vector<Polynomial>(n, Polynomial(n)));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t e = 0; e < n; ++e)
                        hessian[x][y] += third[(x * n + y) * n + e] * grad[e];
            theta[mu].push_back(integrate_hessian(hessian, n));
        }
    }
    return theta;
}

Polynomial flow_residual(const DescendantSeries& series, const std::vector<std::vector<Polynomial>>& theta, int gamma,
                         int mu, int a)
{
    const int cap = series.order - 3;
    Fields f = fields(series);
    Polynomial lhs = f.lower[gamma].derivative(series.var(mu, a));
    Polynomial density = theta[mu][a + 1].derivative(gamma).compose(f.upper, series.order - 2);
    Polynomial rhs = density.derivative(series.var(0, 0));
    return (lhs - rhs).truncated(cap);
}

Polynomial flow_commutator(const DescendantSeries& series, const std::vector<std::vector<Polynomial>>& theta,
                           int gamma, int mu, int a, int nu, int b)
{
    Fields f = fields(series);
    auto rhs = [&](int m, int k) {
        return theta[m][k + 1].derivative(gamma).compose(f.upper, series.order - 2).derivative(series.var(0, 0));
    };
    Polynomial x = rhs(mu, a).derivative(series.var(nu, b));
    Polynomial y = rhs(nu, b).derivative(series.var(mu, a));
    return (x - y).truncated(series.order - 4);
}

HydroReport hydrodynamic_consistency(const Prepotential& p, const DescendantSeries& series)
{
    if (p.r != series.r)
        throw DomainError("prepotential and series disagree on r");
    HydroReport report;
    report.first_residual = Polynomial(series.num_vars());
    const int n = static_cast<int>(series.num_labels());
    const auto theta = hamiltonian_densities(p, series.max_a + 1);
    Fields f = fields(series);
    Polynomial d00 = series.F0.derivative(series.var(0, 0));

    auto record = [&](const Polynomial& residual, const std::string& what) {
        ++report.checks;
        if (residual.is_zero())
            return;
        if (report.ok)
            report.first_residual = residual;
        report.ok = false;
        report.failures.push_back(what);
    };

    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a <= series.max_a; ++a) {
            Polynomial two_point = d00.derivative(series.var(mu, a)).truncated(series.order - 2);
            Polynomial composed = theta[mu][a].compose(f.upper, series.order - 2);
            record((two_point - composed).truncated(series.order - 2),
                   "two-point identity mu=" + std::to_string(mu) + " a=" + std::to_string(a));
        }
    for (int gamma = 0; gamma < n; ++gamma)
        for (int mu = 0; mu < n; ++mu)
            for (int a = 0; a <= series.max_a; ++a)
                record(flow_residual(series, theta, gamma, mu, a),
                       "flow gamma=" + std::to_string(gamma) + " mu=" + std::to_string(mu) + " a=" + std::to_string(a));
    return report;
}

HydroReport hydrodynamic_consistency(int r, int order)
{
    if (r > 4)
        throw ScaleLimitError("scale limit: hydrodynamic check supports r <= 4");
    int max_a = std::min(kMaxSeriesDescendant, std::max(1, order - 3));
    return hydrodynamic_consistency(prepotential(r), build_series(r, order, max_a));
}

} // namespace rspin
