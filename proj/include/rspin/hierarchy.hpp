#pragma once

#include "rspin/lg_frobenius.hpp"
#include "rspin/polynomial.hpp"

#include <string>
#include <vector>

namespace rspin {

// Truncated genus-0 descendant potential in the times t^{m,a}
// (m = 0..r-2, a = 0..max_a), keeping monomials of total degree <= order.
struct DescendantSeries {
    int r = 2;
    int order = 3;
    int max_a = 0;
    Polynomial F0;

    std::size_t num_labels() const { return static_cast<std::size_t>(r - 1); }
    std::size_t var(int m, int a) const { return static_cast<std::size_t>(a) * num_labels() + m; }
    std::size_t num_vars() const { return num_labels() * static_cast<std::size_t>(max_a + 1); }
};

inline constexpr int kMaxSeriesOrder = 8;
inline constexpr int kMaxSeriesDescendant = 3;

DescendantSeries build_series(int r, int order, int max_a = kMaxSeriesDescendant);

// u_{t^{0,1}} - u u_{t^{0,0}} truncated to degree order - 3.
Polynomial kdv_residual(const DescendantSeries& series, const Polynomial& u);
Polynomial dkdv_residual(int order);

// theta_{mu,a} on the small phase space, a = 0..max_a:
// d_alpha d_beta theta_{mu,a} = c_{alpha beta}^eps d_eps theta_{mu,a-1}.
std::vector<std::vector<Polynomial>> hamiltonian_densities(const Prepotential& p, int max_a);

struct HydroReport {
    bool ok = true;
    int checks = 0;
    std::vector<std::string> failures;
    Polynomial first_residual;
};

// Two-point identity d^2F0/dt^{0,0}dt^{mu,a} = theta_{mu,a}(v) and the genus-0
// flows dv_gamma/dt^{mu,a} = d_{t^{0,0}} (d_gamma theta_{mu,a+1})(v).
HydroReport hydrodynamic_consistency(int r, int order);
HydroReport hydrodynamic_consistency(const Prepotential& p, const DescendantSeries& series);

// Single flow residual; for r = 2, (gamma, mu, a) = (0, 0, 1) is the dKdV residual.
Polynomial flow_residual(const DescendantSeries& series, const std::vector<std::vector<Polynomial>>& theta,
                         int gamma, int mu, int a);

// d/dt^{nu,b} of flow (mu,a) minus d/dt^{mu,a} of flow (nu,b), on component gamma.
Polynomial flow_commutator(const DescendantSeries& series, const std::vector<std::vector<Polynomial>>& theta,
                           int gamma, int mu, int a, int nu, int b);

} // namespace rspin
