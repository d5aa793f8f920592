#include "aialo/baselines.hpp"

#include "aialo/ellipsoid.hpp"
#include "aialo/errors.hpp"
#include "aialo/sampling.hpp"

#include <chrono>
#include <cmath>

namespace aialo {
namespace {

constexpr double kBindingTol = 1e-6;

// Solves the program with estimated right-hand sides and fills the report.
void solve_estimated(const LPInstance& inst, const Vector& b_hat, const ToleranceParams& tol,
                     RunReport& report) {
    LinearProgram lp = inst.program();
    lp.b = b_hat;
    try {
        Solution s = solve_lp_ellipsoid(lp, inst.radius_bound(), std::min(tol.eps_opt, tol.eps_feas) / 2.0);
        report.output = s.point;
    } catch (const Error& e) {
        report.status = RunStatus::Failure;
        report.failure = e.what();
    }
}

}  // namespace

std::int64_t uniform_sample_count(double sigma, int count, double delta, double eps_feas) {
    if (count <= 0) return 0;
    if (!(eps_feas > 0.0)) throw ValidationError("uniform sampling needs eps_feas > 0");
    const double raw = 4.0 * sigma * sigma * std::log(count / delta) / (eps_feas * eps_feas);
    return raw > 0.0 ? static_cast<std::int64_t>(std::ceil(raw)) : 0;
}

std::vector<int> unknown_binding_rows(const LPInstance& inst) {
    std::vector<int> out;
    for (int i : binding_set(inst, inst.optimum().point, kBindingTol))
        if (!inst.row_known(i)) out.push_back(i);
    return out;
}

int active_constraint_count(const LPInstance& inst) {
    const Vector& x = inst.optimum().point;
    int d = static_cast<int>(binding_set(inst, x, kBindingTol).size());
    for (int k = 0; k < x.size(); ++k)
        if (std::abs(x(k)) <= kBindingTol) ++d;
    return d;
}

RunReport run_static(const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed) {
    if (inst.unknown() != UnknownSet::B) throw ValidationError("static baseline needs an unknown-b instance");
    tol.validate();
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.algorithm = "static";
    report.seed = seed;

    const int mu = inst.num_unknown_params();
    NoisyOracle oracle = NoisyOracle::for_instance(inst, seed);
    SampleLedger ledger(inst.num_constraints());
    Vector b_hat = inst.rhs();
    for (int i : inst.unknown_params()) {
        const auto count = uniform_sample_count(inst.noise_scale()(i), mu, tol.delta, tol.eps_feas);
        b_hat(i) = oracle.draw_mean(ledger, i, count);
    }
    report.per_param_samples = ledger.counts();
    report.total_samples = ledger.total();
    solve_estimated(inst, b_hat, tol, report);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RunReport run_binding_oracle(const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed) {
    if (inst.unknown() != UnknownSet::B) throw ValidationError("binding oracle needs an unknown-b instance");
    tol.validate();
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.algorithm = "binding_oracle";
    report.seed = seed;
    report.is_oracle = true;

    const std::vector<int> binding = unknown_binding_rows(inst);
    const int d = active_constraint_count(inst);
    NoisyOracle oracle = NoisyOracle::for_instance(inst, seed);
    SampleLedger ledger(inst.num_constraints());
    Vector b_hat = inst.rhs();
    for (int i : binding) {
        const auto count = uniform_sample_count(inst.noise_scale()(i), d, tol.delta, tol.eps_feas);
        b_hat(i) = oracle.draw_mean(ledger, i, count);
    }
    report.per_param_samples = ledger.counts();
    report.total_samples = ledger.total();
    solve_estimated(inst, b_hat, tol, report);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace aialo
