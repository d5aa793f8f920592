#include "aialo/ucb_ellipsoid.hpp"

#include "aialo/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

namespace aialo {
namespace {
void audit_draw(const LPInstance& inst, const SampleLedger& ledger, int i, double dp, double scale,
                UcbTrace* trace) {
    if (!trace || !trace->confidence_event_held) return;
    const double radius = scale * confidence_radius(inst.noise_scale()(i), ledger.count(i), dp);
    if (std::abs(ledger.mean(i) - inst.rhs()(i)) > radius) trace->confidence_event_held = false;
}

UcbOutcome ucb_search(const Vector& x, const LPInstance& inst, NoisyOracle& oracle,
                      SampleLedger& ledger, double dp, double eps_feas, double scale, UcbTrace* trace) {
    const int m = inst.num_constraints();
    const int n = inst.num_vars();
    const Vector ax = inst.constraint_matrix() * x;
    const Vector& sigma = inst.noise_scale();

    // Estimated violation and confidence radius of every combined row.
    std::vector<double> est(m + n);
    std::vector<double> rad(m + n, 0.0);
    auto refresh = [&](int i) {
        est[i] = ax(i) - ledger.mean(i);
        rad[i] = scale * confidence_radius(sigma(i), ledger.count(i), dp);
    };
    for (int i = 0; i < m; ++i) {
        if (inst.row_known(i))
            est[i] = ax(i) - inst.rhs()(i);
        else
            refresh(i);
    }
    for (int k = 0; k < n; ++k) est[m + k] = -x(k);

    for (;;) {
        int j = 0;
        double best = est[0] + rad[0];
        for (int i = 1; i < m + n; ++i) {
            const double ucb = est[i] + rad[i];
            if (ucb > best) best = ucb, j = i;
        }
        if (est[j] - rad[j] > 0.0) return ViolatedConstraint{j};
        if (est[j] + rad[j] < 0.0) return Feasible{FeasibleReason::UpperBoundNegative};
        if (rad[j] < eps_feas / 2.0) return Feasible{FeasibleReason::RadiusBelowEpsHalf};
        if (rad[j] == 0.0) return Feasible{FeasibleReason::RadiusBelowEpsHalf};  // known row, zero slack

        oracle.draw(ledger, j);
        audit_draw(inst, ledger, j, dp, scale, trace);
        refresh(j);
    }
}

void record_gaps(const LPInstance& inst, const Vector& x, GapDiagnostics& gaps) {
    const LinearProgram& lp = inst.program();
    gaps.violations.push_back(lp.A * x - lp.b);
    const double vstar = std::max(gaps.violations.back().maxCoeff(), (-x).maxCoeff());
    const auto k = gaps.max_violation.size();
    gaps.max_violation.conservativeResize(k + 1);
    gaps.max_violation(k) = vstar;
}

void finalize_gaps(GapDiagnostics& gaps, int m) {
    gaps.min_gap = Vector::Constant(m, std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < gaps.violations.size(); ++k)
        for (int i = 0; i < m; ++i) gaps.min_gap(i) = std::min(gaps.min_gap(i), gaps.gap(i, k));
}

double lnln_floor(double x) { return x > std::exp(1.0) ? std::log(std::log(x)) : 0.0; }

}  // namespace

void UcbOptions::validate() const {
    if (!(radius_scale > 0.0) || !std::isfinite(radius_scale))
        throw ValidationError("radius_scale must be positive and finite");
}

double GapDiagnostics::gap(int i, std::size_t k) const {
    const double v = violations.at(k)(i);
    return std::max({std::abs(v), max_violation(static_cast<Eigen::Index>(k)) - v, eps});
}

UcbOutcome ucb_subroutine(const Vector& x, const LPInstance& inst, NoisyOracle& oracle,
                          SampleLedger& ledger, double dp, double eps_feas, const UcbOptions& opts) {
    if (x.size() != inst.num_vars()) throw ValidationError("ucb_subroutine: dimension mismatch");
    for (int i : inst.unknown_params())
        if (ledger.count(i) < 1) throw DomainError("ucb_subroutine: every unknown row needs a sample");
    opts.validate();
    return ucb_search(x, inst, oracle, ledger, dp, eps_feas, opts.radius_scale, nullptr);
}

RunReport run_ucb_ellipsoid(const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed,
                            const UcbOptions& opts, UcbTrace* trace) {
    if (inst.unknown() != UnknownSet::B) throw ValidationError("Ellipsoid-UCB needs an unknown-b instance");
    tol.validate();
    opts.validate();
    const double scale = opts.radius_scale;
    const double eps = std::min(tol.eps_opt, tol.eps_feas);
    if (!(eps > 0.0)) throw ValidationError("Ellipsoid-UCB needs positive eps_opt and eps_feas");

    const auto start = std::chrono::steady_clock::now();
    const int m = inst.num_constraints();
    const int n = inst.num_vars();
    const Vector& c = inst.objective();

    RunReport report;
    report.algorithm = "ucb_ellipsoid";
    report.seed = seed;

    NoisyOracle oracle = NoisyOracle::for_instance(inst, seed);
    SampleLedger ledger(m);
    const double dp = delta_prime(tol.delta, std::max(1, inst.num_unknown_params()));
    if (trace) {
        *trace = UcbTrace{};
        trace->gaps.eps = tol.eps_feas / 2.0;
    }
    for (int i : inst.unknown_params()) {
        oracle.draw(ledger, i);
        audit_draw(inst, ledger, i, dp, scale, trace);
    }

    const std::int64_t cap = iteration_cap(n, inst.radius_bound(), c.norm(), eps);
    EllipsoidState state = initial_ellipsoid(inst);
    std::optional<Vector> best;
    double best_value = -std::numeric_limits<double>::infinity();
    bool capped = false;

    while (!should_stop(state, c, eps)) {
        if (state.iteration >= cap) {
            capped = true;
            break;
        }
        const Vector z = state.center;
        if (trace) record_gaps(inst, z, trace->gaps);
        const UcbOutcome outcome = ucb_search(z, inst, oracle, ledger, dp, tol.eps_feas, scale, trace);

        Vector y;
        if (const auto* v = std::get_if<ViolatedConstraint>(&outcome)) {
            y = constraint_normal(inst.program(), v->index);
            if (trace) {
                ++trace->violation_verdicts;
                const double truth = v->index < m ? inst.constraint_matrix().row(v->index).dot(z) - inst.rhs()(v->index)
                                                  : -z(v->index - m);
                if (!(truth > 0.0)) ++trace->wrong_violation_verdicts;
            }
        } else {
            if (trace) {
                ++trace->feasible_verdicts;
                if (max_violation(inst.program(), z) > tol.eps_feas) ++trace->wrong_feasible_verdicts;
            }
            const double value = c.dot(z);
            if (!best || value > best_value) {
                best = z;
                best_value = value;
            }
            y = -c;
        }
        try {
            state = central_cut(state, y);
        } catch (const NumericalBreakdown&) {
            break;
        }
    }

    report.iterations = state.iteration;
    report.per_param_samples = ledger.counts();
    report.total_samples = ledger.total();
    if (trace) finalize_gaps(trace->gaps, m);
    if (capped) {
        report.status = RunStatus::Failure;
        report.failure = "iteration cap reached";
    } else if (!best) {
        report.status = RunStatus::Failure;
        report.failure = "no feasible center found";
    } else {
        report.output = *best;
    }
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double theoretical_bound(const GapDiagnostics& diag, const LPInstance& inst, const ToleranceParams& tol) {
    const double mu = std::max(1, inst.num_unknown_params());
    double total = 0.0;
    for (int i : inst.unknown_params()) {
        const double gap = diag.min_gap.size() > i ? diag.min_gap(i) : diag.eps;
        const double sigma = inst.noise_scale()(i);
        const double s = sigma * sigma / (gap * gap);
        total += s * std::log(mu / tol.delta) + s * lnln_floor(s);
    }
    return total;
}

double per_row_sample_bound(double sigma, double min_gap, int m, double delta) {
    const double s = sigma * sigma / (min_gap * min_gap);
    const double dp = delta_prime(delta, m);
    return 108.0 * s * std::log(20.0 * m / delta) + 72.0 * s * lnln_floor(108.0 * s / dp);
}

}  // namespace aialo
