#pragma once

#include "rspin/correlators.hpp"
#include "rspin/graph.hpp"
#include "rspin/lg_frobenius.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rspin {

// Stack-level statements are only tested through their correlator-level
// consequences; every result carries that scope in its detail line.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first failing input, or the scope of a pass
};

using OrderedEvaluator = std::function<Rational(int r, const std::vector<Insertion>& ordered)>;
using PrimaryEvaluator = std::function<Rational(int r, const std::vector<int>& m)>;

// |<J^{m+1}>| computed by repeated multiplication in Z/r, against r / gcd(m+1, r).
int subgroup_order(int r, int generator_exponent);
CheckResult check_axiom1_factors(int r, const DecoratedGraph& graph);
CheckResult check_axiom1_factors(int r); // every enumerated genus <= 1, n <= 4 graph
// Dimension additivity over the components of cut forests.
CheckResult check_axiom1b_components(int r);
CheckResult check_axiom3_splitting(int r);
CheckResult check_axiom3_splitting(const Prepotential& p);
CheckResult check_axiom4_ramond(int r);
CheckResult check_axiom4_ramond(int r, const PrimaryEvaluator& engine);
CheckResult check_axiom5_forget(int r);
CheckResult check_dimension_vanishing(int r);
CheckResult check_normalization(int r);
CheckResult check_normalization(int r, const PrimaryEvaluator& engine);
CheckResult check_sn_invariance(int r, int samples = 100, std::uint64_t seed = 0x5eed);
CheckResult check_sn_invariance(int r, int samples, std::uint64_t seed, const OrderedEvaluator& evaluator);

// Evaluates a correlator following the given insertion order: TRR on the first
// maximal-a insertion with the first two other legs, or ordered derivatives of F.
Rational evaluate_ordered(int r, const std::vector<Insertion>& ordered);

std::vector<CheckResult> run_axiom_suite(int r);

} // namespace rspin
