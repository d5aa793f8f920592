#include "aialo/bench_harness.hpp"

#include "aialo/baselines.hpp"
#include "aialo/errors.hpp"
#include "aialo/sampling.hpp"
#include "aialo/succ_elim.hpp"
#include "aialo/tau_solver.hpp"
#include "aialo/ucb_ellipsoid.hpp"
#include "aialo/vertex_enum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace aialo {
namespace {

Vector unit_ball_point(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vector dir(n);
    double norm = 0.0;
    do {
        for (int k = 0; k < n; ++k) dir(k) = normal(rng);
        norm = dir.norm();
    } while (norm == 0.0);
    return dir / norm * std::pow(unif(rng), 1.0 / n);
}

std::uint64_t double_bits(double v) { return std::bit_cast<std::uint64_t>(v); }

struct Moments {
    double mean = 0.0;
    double std = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

// Pooled per-row sample means over binding / non-binding unknown rows.
struct Pool {
    double binding_sum = 0.0, binding_rows = 0.0;
    double nonbinding_sum = 0.0, nonbinding_rows = 0.0;

    void add(const RunReport& r, const LPInstance& inst) {
        const std::vector<int> binding = unknown_binding_rows(inst);
        std::vector<bool> is_binding(inst.num_constraints(), false);
        for (int i : binding) is_binding[i] = true;
        for (int i : inst.unknown_params()) {
            const double s = i < static_cast<int>(r.per_param_samples.size()) ? r.per_param_samples[i] : 0.0;
            if (is_binding[i]) {
                binding_sum += s;
                binding_rows += 1.0;
            } else {
                nonbinding_sum += s;
                nonbinding_rows += 1.0;
            }
        }
    }
    double binding() const { return binding_rows > 0 ? binding_sum / binding_rows : 0.0; }
    double nonbinding() const { return nonbinding_rows > 0 ? nonbinding_sum / nonbinding_rows : 0.0; }
};

GeneratorConfig with_axis(GeneratorConfig cfg, ToleranceParams& tol, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::M: cfg.m = static_cast<int>(value); break;
        case SweepAxis::N: cfg.n = static_cast<int>(value); break;
        case SweepAxis::Sigma: cfg.sigma = value; break;
        case SweepAxis::InvEps:
            tol.eps_opt = 1.0 / value;
            tol.eps_feas = 1.0 / value;
            break;
    }
    return cfg;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool has_unique_vertex_optimum(const LPInstance& inst, double tol) {
    const LinearProgram& lp = inst.program();
    const Vector& x = inst.optimum().point;
    const int n = lp.num_vars();
    const int m = lp.num_constraints();
    const Vector slack = lp.A * x - lp.b;
    std::vector<int> active;
    for (int i = 0; i < m; ++i)
        if (std::abs(slack(i)) <= 1e-7) active.push_back(i);
    for (int k = 0; k < n; ++k)
        if (std::abs(x(k)) <= 1e-7) active.push_back(m + k);
    if (static_cast<int>(active.size()) != n) return false;

    Matrix normals(n, n);
    for (int r = 0; r < n; ++r) normals.col(r) = constraint_normal(lp, active[r]);
    Eigen::FullPivLU<Matrix> lu(normals);
    if (!lu.isInvertible()) return false;
    const Vector mult = lu.solve(lp.c);
    if ((normals * mult - lp.c).norm() > 1e-8 * (1.0 + lp.c.norm())) return false;
    return mult.minCoeff() > tol * lp.c.norm();
}

LPInstance generate_instance(const GeneratorConfig& cfg) {
    if (cfg.n < 1 || cfg.m < 1) throw ValidationError("generator needs n >= 1 and m >= 1");
    if (!(cfg.sigma > 0.0)) throw ValidationError("generator needs sigma > 0");
    std::mt19937_64 rng(derive_seed(cfg.seed, {0x6e6e}));
    std::uniform_real_distribution<double> c_dist(cfg.c_lo, cfg.c_hi);
    std::uniform_real_distribution<double> b_dist(cfg.b_lo, cfg.b_hi);
    const int n = cfg.n;
    const int rows = cfg.m + n;

    for (int attempt = 0; attempt < 100; ++attempt) {
        LinearProgram lp;
        lp.c.resize(n);
        for (int k = 0; k < n; ++k) lp.c(k) = c_dist(rng);
        lp.A = Matrix::Zero(rows, n);
        lp.b.resize(rows);
        for (int i = 0; i < cfg.m; ++i) {
            lp.A.row(i) = unit_ball_point(n, rng).transpose();
            lp.b(i) = b_dist(rng);
        }
        std::vector<bool> known(rows, false);
        for (int k = 0; k < n; ++k) {
            lp.A(cfg.m + k, k) = 1.0;
            lp.b(cfg.m + k) = cfg.box_bound;
            known[cfg.m + k] = true;
        }
        const Vector sigma = Vector::Constant(cfg.unknown == UnknownSet::B ? rows : n, cfg.sigma);
        try {
            LPInstance inst(std::move(lp), cfg.box_bound * std::sqrt(static_cast<double>(n)), cfg.unknown,
                            sigma, known);
            if (!has_unique_vertex_optimum(inst)) continue;
            if (cfg.unknown == UnknownSet::C && (cfg.min_objective_gap > 0.0 || cfg.max_objective_gap > 0.0)) {
                const double gap = objective_gap(inst, enumerate_vertices(inst));
                if (gap < cfg.min_objective_gap) continue;
                if (cfg.max_objective_gap > 0.0 && gap > cfg.max_objective_gap) continue;
            }
            return inst;
        } catch (const InfeasibleOrUnbounded&) {
            continue;
        }
    }
    throw GeneratorExhausted("instance generator rejected 100 candidates");
}

void evaluate_report(RunReport& report, const LPInstance& inst, const ToleranceParams& tol) {
    if (inst.unknown() == UnknownSet::C) {
        report.correct = report.ok() &&
                         (report.output - inst.optimum().point).lpNorm<Eigen::Infinity>() <= 1e-6;
        return;
    }
    report.correct = report.ok() && check_opt_membership(inst, report.output, tol);
    Pool pool;
    pool.add(report, inst);
    report.binding_mean = pool.binding();
    report.nonbinding_mean = pool.nonbinding();
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::UcbEllipsoid: return "ucb_ellipsoid";
        case Algorithm::Static: return "static";
        case Algorithm::BindingOracle: return "binding_oracle";
        case Algorithm::SuccElim: return "succ_elim";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "ucb" || name == "ucb_ellipsoid" || name == "ucb-ellipsoid") return Algorithm::UcbEllipsoid;
    if (name == "static") return Algorithm::Static;
    if (name == "oracle" || name == "binding_oracle" || name == "binding-oracle") return Algorithm::BindingOracle;
    if (name == "succ-elim" || name == "succ_elim") return Algorithm::SuccElim;
    throw ValidationError("unknown algorithm: " + name);
}

RunReport run_algorithm(Algorithm a, const LPInstance& inst, const ToleranceParams& tol, std::uint64_t seed,
                        const RunOptions& opts) {
    RunReport r;
    switch (a) {
        case Algorithm::UcbEllipsoid: r = run_ucb_ellipsoid(inst, tol, seed, opts.ucb); break;
        case Algorithm::Static: r = run_static(inst, tol, seed); break;
        case Algorithm::BindingOracle: r = run_binding_oracle(inst, tol, seed); break;
        case Algorithm::SuccElim: {
            EliminationConfig cfg;
            r = run_successive_elimination(inst, tol.delta, seed, cfg);
            break;
        }
    }
    evaluate_report(r, inst, tol);
    return r;
}

void parallel_for(int count, int threads, const std::function<void(int)>& task) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = next++; i < count; i = next++) task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int resolve_threads(int requested) {
    if (const char* env = std::getenv("AIALO_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return std::max(1, requested);
}

std::string axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::M: return "m";
        case SweepAxis::N: return "n";
        case SweepAxis::Sigma: return "sigma";
        case SweepAxis::InvEps: return "inv_eps";
    }
    return "?";
}

SweepAxis parse_axis(const std::string& name) {
    if (name == "m") return SweepAxis::M;
    if (name == "n") return SweepAxis::N;
    if (name == "sigma") return SweepAxis::Sigma;
    if (name == "inv_eps" || name == "inv-eps" || name == "eps") return SweepAxis::InvEps;
    throw ValidationError("unknown sweep axis: " + name);
}

std::uint64_t instance_seed(std::uint64_t base, double axis_value, int trial) {
    return derive_seed(base, {double_bits(axis_value), static_cast<std::uint64_t>(trial)});
}

std::uint64_t algorithm_seed(std::uint64_t base, double axis_value, int trial, Algorithm a) {
    return derive_seed(base, {double_bits(axis_value), static_cast<std::uint64_t>(trial),
                              0xa1600000ULL + static_cast<std::uint64_t>(a)});
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("sweep needs trials >= 1");
    if (cfg.values.empty()) throw ValidationError("sweep needs at least one axis value");
    const int n_alg = static_cast<int>(cfg.algorithms.size());
    const int n_val = static_cast<int>(cfg.values.size());
    const int tasks = n_val * cfg.trials;
    std::vector<std::vector<RunReport>> reports(tasks, std::vector<RunReport>(n_alg));
    std::vector<Pool> pools(tasks * n_alg);

    parallel_for(tasks, cfg.threads, [&](int t) {
        const int v = t / cfg.trials;
        const int trial = t % cfg.trials;
        const double value = cfg.values[v];
        ToleranceParams tol = cfg.tol;
        GeneratorConfig gen = with_axis(cfg.base, tol, cfg.axis, value);
        gen.seed = instance_seed(cfg.seed, value, trial);
        const LPInstance inst = generate_instance(gen);
        for (int a = 0; a < n_alg; ++a) {
            const Algorithm alg = cfg.algorithms[a];
            RunReport r = run_algorithm(alg, inst, tol, algorithm_seed(cfg.seed, value, trial, alg), cfg.run);
            pools[t * n_alg + a].add(r, inst);
            reports[t][a] = std::move(r);
        }
    });

    std::vector<SweepRow> rows;
    for (int v = 0; v < n_val; ++v) {
        for (int a = 0; a < n_alg; ++a) {
            SweepRow row;
            row.axis = axis_name(cfg.axis);
            row.axis_value = cfg.values[v];
            row.algorithm = algorithm_name(cfg.algorithms[a]);
            row.trials = cfg.trials;
            std::vector<double> totals;
            Pool pooled;
            int correct = 0;
            for (int trial = 0; trial < cfg.trials; ++trial) {
                const int t = v * cfg.trials + trial;
                const RunReport& r = reports[t][a];
                totals.push_back(static_cast<double>(r.total_samples));
                correct += r.correct ? 1 : 0;
                row.failures += r.ok() ? 0 : 1;
                const Pool& p = pools[t * n_alg + a];
                pooled.binding_sum += p.binding_sum;
                pooled.binding_rows += p.binding_rows;
                pooled.nonbinding_sum += p.nonbinding_sum;
                pooled.nonbinding_rows += p.nonbinding_rows;
            }
            const Moments mo = moments(totals);
            row.mean_samples = mo.mean;
            row.std_samples = mo.std;
            row.correct_rate = static_cast<double>(correct) / cfg.trials;
            row.mean_binding = pooled.binding();
            row.mean_nonbinding = pooled.nonbinding();
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "axis,axis_value,algorithm,trials,mean_samples,std_samples,correct_rate,mean_binding,"
          "mean_nonbinding,failures\n";
    for (const auto& r : rows) {
        os << r.axis << ',' << format_number(r.axis_value) << ',' << r.algorithm << ',' << r.trials << ','
           << format_number(r.mean_samples) << ',' << format_number(r.std_samples) << ','
           << format_number(r.correct_rate) << ',' << format_number(r.mean_binding) << ','
           << format_number(r.mean_nonbinding) << ',' << r.failures << '\n';
    }
    return os.str();
}

std::vector<Table1Row> table1_report(const Table1Config& cfg) {
    SweepConfig sweep;
    sweep.axis = SweepAxis::M;
    sweep.values = {static_cast<double>(cfg.base.m)};
    sweep.trials = cfg.trials;
    sweep.base = cfg.base;
    sweep.tol = cfg.tol;
    sweep.algorithms = {Algorithm::Static, Algorithm::UcbEllipsoid, Algorithm::BindingOracle};
    sweep.seed = cfg.seed;
    sweep.threads = cfg.threads;
    sweep.run = cfg.run;
    std::vector<Table1Row> out;
    for (const SweepRow& r : run_sweep(sweep))
        out.push_back({r.algorithm, r.trials, r.mean_binding, r.mean_nonbinding, r.correct_rate, r.failures});
    return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "algorithm,trials,binding_mean,nonbinding_mean,correct_rate,failures\n";
    for (const auto& r : rows)
        os << r.algorithm << ',' << r.trials << ',' << format_number(r.binding_mean) << ','
           << format_number(r.nonbinding_mean) << ',' << format_number(r.correct_rate) << ',' << r.failures
           << '\n';
    return os.str();
}

std::vector<CdfPoint> cdf_report(const CdfConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("cdf needs trials >= 1");
    std::vector<CdfPoint> points(cfg.trials);
    const double m_value = static_cast<double>(cfg.base.m);
    parallel_for(cfg.trials, cfg.threads, [&](int trial) {
        GeneratorConfig gen = cfg.base;
        gen.seed = instance_seed(cfg.seed, m_value, trial);
        const LPInstance inst = generate_instance(gen);
        const RunReport ucb = run_algorithm(Algorithm::UcbEllipsoid, inst, cfg.tol,
                                            algorithm_seed(cfg.seed, m_value, trial, Algorithm::UcbEllipsoid), cfg.run);
        const RunReport oracle = run_algorithm(Algorithm::BindingOracle, inst, cfg.tol,
                                               algorithm_seed(cfg.seed, m_value, trial, Algorithm::BindingOracle), cfg.run);
        CdfPoint& p = points[trial];
        p.trial = trial;
        p.binding = active_constraint_count(inst);
        p.ratio = oracle.total_samples > 0
                      ? static_cast<double>(ucb.total_samples) / static_cast<double>(oracle.total_samples)
                      : std::numeric_limits<double>::infinity();
        const double d = p.binding;
        const double mu = inst.num_unknown_params();
        p.static_ratio = d > 1.0 ? (mu * std::log(mu)) / (d * std::log(d)) : std::numeric_limits<double>::infinity();
    });
    std::stable_sort(points.begin(), points.end(),
                     [](const CdfPoint& a, const CdfPoint& b) { return a.ratio < b.ratio; });
    for (std::size_t k = 0; k < points.size(); ++k)
        points[k].cdf = static_cast<double>(k + 1) / static_cast<double>(points.size());
    return points;
}

std::string cdf_csv(const std::vector<CdfPoint>& points) {
    std::ostringstream os;
    os << "rank,ratio,cdf,trial,binding,static_ratio\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& p = points[k];
        os << k + 1 << ',' << format_number(p.ratio) << ',' << format_number(p.cdf) << ',' << p.trial << ','
           << p.binding << ',' << format_number(p.static_ratio) << '\n';
    }
    return os.str();
}

double elimination_sample_bound(double low, double gap, int vertices, double delta) {
    const double lg = std::log(1.0 / gap);
    if (!(lg > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return 50.0 * low * lg * (std::log(static_cast<double>(vertices)) + std::log(1.0 / delta) + std::log(lg));
}

std::vector<SuccElimTrial> succ_elim_bench(const SuccElimBenchConfig& cfg) {
    if (cfg.trials < 1) throw ValidationError("succ-elim bench needs trials >= 1");
    GeneratorConfig base = cfg.base;
    base.unknown = UnknownSet::C;
    std::vector<SuccElimTrial> out(cfg.trials);
    const double key = static_cast<double>(base.n * 1000 + base.m);
    parallel_for(cfg.trials, cfg.threads, [&](int trial) {
        GeneratorConfig gen = base;
        gen.seed = instance_seed(cfg.seed, key, trial);
        const LPInstance inst = generate_instance(gen);
        const VertexSet vertices = enumerate_vertices(inst);
        const RunReport r = run_successive_elimination(
            inst, cfg.delta, algorithm_seed(cfg.seed, key, trial, Algorithm::SuccElim));
        SuccElimTrial& t = out[trial];
        t.trial = trial;
        t.vertices = static_cast<int>(vertices.size());
        t.gap = objective_gap(inst, vertices);
        t.low = low_of_instance(inst, vertices).low;
        t.total_samples = r.total_samples;
        t.rounds = static_cast<int>(r.iterations);
        t.correct = r.ok() && (r.output - inst.optimum().point).lpNorm<Eigen::Infinity>() <= 1e-6;
        t.bound = elimination_sample_bound(t.low, t.gap, t.vertices, cfg.delta);
        t.within_bound = static_cast<double>(t.total_samples) <= t.bound;
    });
    return out;
}

std::string succ_elim_csv(const std::vector<SuccElimTrial>& rows) {
    std::ostringstream os;
    os << "trial,vertices,gap,low,total_samples,rounds,correct,bound,within_bound\n";
    for (const auto& t : rows)
        os << t.trial << ',' << t.vertices << ',' << format_number(t.gap) << ',' << format_number(t.low) << ','
           << t.total_samples << ',' << t.rounds << ',' << (t.correct ? 1 : 0) << ',' << format_number(t.bound)
           << ',' << (t.within_bound ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace aialo
