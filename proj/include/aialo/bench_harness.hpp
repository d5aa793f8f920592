#pragma once

#include "aialo/lp_model.hpp"
#include "aialo/run_report.hpp"
#include "aialo/ucb_ellipsoid.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace aialo {

struct GeneratorConfig {
    int n = 4;
    int m = 80;
    double sigma = 1.0;
    double box_bound = 500.0;
    double c_lo = -10.0, c_hi = 10.0;
    double b_lo = 0.0, b_hi = 10.0;
    UnknownSet unknown = UnknownSet::B;
    // Unknown-c only: reject instances whose best-vs-second-best extreme-point
    // gap falls outside [min_objective_gap, max_objective_gap].
    double min_objective_gap = 0.0;
    double max_objective_gap = 0.0;  // 0 disables the upper filter
    std::uint64_t seed = 1;
};

// m random rows uniform on the unit ball with b ~ U[b_lo, b_hi], c ~
// U[c_lo, c_hi]^n, plus n known box rows x_i <= box_bound, R = box_bound sqrt(n).
// Instances whose optimum is not a strict, nondegenerate vertex are
// resampled. Throws GeneratorExhausted after 100 rejections.
LPInstance generate_instance(const GeneratorConfig& cfg);

// Strict vertex optimum: exactly n active rows (A rows and sign rows) at the
// optimum with objective multipliers all above tol * |c|.
bool has_unique_vertex_optimum(const LPInstance& inst, double tol = 1e-6);

// Fills correct / binding_mean / nonbinding_mean from the true instance.
void evaluate_report(RunReport& report, const LPInstance& inst, const ToleranceParams& tol);

enum class Algorithm { UcbEllipsoid, Static, BindingOracle, SuccElim };
std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct RunOptions {
    UcbOptions ucb{.radius_scale = kEmpiricalRadiusScale};
};

RunReport run_algorithm(Algorithm a, const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed,
                        const RunOptions& opts = {});

// Runs `count` independent tasks on up to `threads` workers. Results are
// indexed by task, so output never depends on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& task);

// AIALO_THREADS overrides the requested thread count when set.
int resolve_threads(int requested);

enum class SweepAxis { M, N, Sigma, InvEps };
std::string axis_name(SweepAxis a);
SweepAxis parse_axis(const std::string& name);

struct SweepRow {
    std::string axis;
    double axis_value = 0.0;
    std::string algorithm;
    int trials = 0;
    double mean_samples = 0.0;
    double std_samples = 0.0;
    double correct_rate = 0.0;
    double mean_binding = 0.0;
    double mean_nonbinding = 0.0;
    int failures = 0;
};

struct SweepConfig {
    SweepAxis axis = SweepAxis::M;
    std::vector<double> values;
    int trials = 50;
    GeneratorConfig base;
    ToleranceParams tol{0.1, 0.1, 0.1};
    std::vector<Algorithm> algorithms{Algorithm::UcbEllipsoid, Algorithm::Static, Algorithm::BindingOracle};
    std::uint64_t seed = 1;
    int threads = 1;
    RunOptions run;
};

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Per-trial seeds: instance seed depends on (base, axis value, trial); the
// algorithm seed additionally on the algorithm id.
std::uint64_t instance_seed(std::uint64_t base, double axis_value, int trial);
std::uint64_t algorithm_seed(std::uint64_t base, double axis_value, int trial, Algorithm a);

struct Table1Row {
    std::string algorithm;
    int trials = 0;
    double binding_mean = 0.0;
    double nonbinding_mean = 0.0;
    double correct_rate = 0.0;
    int failures = 0;
};

struct Table1Config {
    GeneratorConfig base{.n = 4, .m = 80};
    ToleranceParams tol{0.1, 0.1, 0.1};
    int trials = 100;
    std::uint64_t seed = 1;
    int threads = 1;
    RunOptions run;
};

std::vector<Table1Row> table1_report(const Table1Config& cfg);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct CdfPoint {
    int trial = 0;
    double ratio = 0.0;  // ucb total / binding-oracle total
    double cdf = 0.0;
    int binding = 0;     // d, constraints active at the optimum
    double static_ratio = 0.0;  // R = m ln m / (d ln d)
};

struct CdfConfig {
    GeneratorConfig base{.n = 6, .m = 80};
    ToleranceParams tol{0.1, 0.1, 0.1};
    int trials = 500;
    std::uint64_t seed = 1;
    int threads = 1;
    RunOptions run;
};

// Sorted by ratio; cdf = rank / trials.
std::vector<CdfPoint> cdf_report(const CdfConfig& cfg);
std::string cdf_csv(const std::vector<CdfPoint>& points);

struct SuccElimTrial {
    int trial = 0;
    int vertices = 0;
    double gap = 0.0;
    double low = 0.0;
    std::int64_t total_samples = 0;
    int rounds = 0;
    bool correct = false;
    double bound = 0.0;  // 50 Low ln(1/gap) (ln|S| + ln(1/delta) + lnln(1/gap))
    bool within_bound = false;
};

struct SuccElimBenchConfig {
    // Objective gaps are kept in [0.05, 1/e] so that ln(1/gap) >= 1 in the bound.
    GeneratorConfig base{.n = 3,
                         .m = 6,
                         .c_lo = -1.0,
                         .c_hi = 1.0,
                         .unknown = UnknownSet::C,
                         .min_objective_gap = 0.05,
                         .max_objective_gap = 0.36787944117144233};
    double delta = 0.1;
    int trials = 100;
    std::uint64_t seed = 1;
    int threads = 1;
};

std::vector<SuccElimTrial> succ_elim_bench(const SuccElimBenchConfig& cfg);
std::string succ_elim_csv(const std::vector<SuccElimTrial>& rows);

// 50 Low ln(1/gap) (ln|S| + ln(1/delta) + lnln(1/gap)); NaN when gap >= 1,
// where the expression is undefined (and never counts as satisfied).
double elimination_sample_bound(double low, double gap, int vertices, double delta);

// Six significant digits, "inf"/"nan" spelled out.
std::string format_number(double v);

}  // namespace aialo
