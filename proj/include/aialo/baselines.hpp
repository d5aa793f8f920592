#pragma once

#include "aialo/lp_model.hpp"
#include "aialo/run_report.hpp"

#include <cstdint>
#include <vector>

namespace aialo {

// ceil(4 sigma^2 ln(count / delta) / eps^2); zero when count is zero.
std::int64_t uniform_sample_count(double sigma, int count, double delta, double eps_feas);

// Samples every unknown right-hand side to uniform precision, then solves the
// estimated program with the ellipsoid solver at accuracy min(eps)/2.
RunReport run_static(const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed);

// Reference line that knows x*: samples only the unknown rows binding at x*
// (tolerance 1e-6), each ceil(4 sigma^2 ln(d / delta) / eps^2) times with d =
// active_constraint_count, and substitutes true values for every other row.
// Marked is_oracle; it is not a legal algorithm.
RunReport run_binding_oracle(const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed);

// Unknown rows binding at the true optimum.
std::vector<int> unknown_binding_rows(const LPInstance& inst);

// Constraints active at the true optimum, counting every row of A (known or
// not) and every sign constraint. Equals n at a nondegenerate vertex.
int active_constraint_count(const LPInstance& inst);

}  // namespace aialo
