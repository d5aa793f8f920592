#include "aialo/cli.hpp"

#include "aialo/bench_harness.hpp"
#include "aialo/errors.hpp"
#include "aialo/instance_io.hpp"
#include "aialo/run_report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace aialo {
namespace {

struct GlobalOptions {
    std::uint64_t seed = 1;
    int trials = -1;
    std::string out;
    double delta = 0.1;
    double eps1 = 0.1;
    double eps2 = 0.1;
    int threads = 1;
    double radius_scale = kEmpiricalRadiusScale;

    RunOptions run() const { return {.ucb = {.radius_scale = radius_scale}}; }
    ToleranceParams tol() const { return {delta, eps1, eps2}; }
    int trials_or(int fallback) const { return trials > 0 ? trials : fallback; }
};

struct InstanceOptions {
    int n = 0;
    int m = 0;
    double sigma = 1.0;
    std::string unknown = "b";
    double min_gap = 0.0;
    double max_gap = 0.0;
};

void add_instance_flags(CLI::App* cmd, InstanceOptions& o) {
    cmd->add_option("--n", o.n, "number of variables");
    cmd->add_option("--m", o.m, "number of random constraints");
    cmd->add_option("--sigma", o.sigma, "noise scale of every unknown parameter");
}

GeneratorConfig generator_from(const InstanceOptions& o, int n_default, int m_default) {
    GeneratorConfig g;
    g.n = o.n > 0 ? o.n : n_default;
    g.m = o.m > 0 ? o.m : m_default;
    g.sigma = o.sigma;
    g.unknown = o.unknown == "c" ? UnknownSet::C : UnknownSet::B;
    g.min_objective_gap = o.min_gap;
    g.max_objective_gap = o.max_gap;
    return g;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("--values: cannot parse '" + item + "'");
        }
    }
    if (values.empty()) throw ValidationError("--values must list at least one number");
    return values;
}

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out) {
    if (g.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + g.out);
    f << text;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear programs with noisy, sampleable parameters"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "base seed");
    app.add_option("--trials", g.trials, "trials per configuration");
    app.add_option("--out", g.out, "write output to this path instead of stdout");
    app.add_option("--delta", g.delta, "failure probability");
    app.add_option("--eps1", g.eps1, "optimality tolerance");
    app.add_option("--eps2", g.eps2, "feasibility tolerance");
    app.add_option("--threads", g.threads, "worker threads (AIALO_THREADS overrides)");
    app.add_option("--radius-scale", g.radius_scale,
                   "multiplier on the Ellipsoid-UCB confidence radius (1 = full anytime bound)");

    InstanceOptions inst_opts;

    auto* generate = app.add_subcommand("generate", "emit a random instance as JSON");
    add_instance_flags(generate, inst_opts);
    generate->add_option("--unknown", inst_opts.unknown, "hidden component")->check(CLI::IsMember({"b", "c"}));
    generate->add_option("--min-gap", inst_opts.min_gap, "unknown-c: minimum objective gap");
    generate->add_option("--max-gap", inst_opts.max_gap, "unknown-c: maximum objective gap");

    std::string instance_path;
    std::string alg = "ucb";
    auto* run = app.add_subcommand("run", "run one algorithm on one instance");
    run->add_option("--instance", instance_path, "instance JSON file")->required();
    run->add_option("--alg", alg, "ucb | static | oracle | succ-elim");

    std::string axis = "m";
    std::string values_text;
    auto* sweep = app.add_subcommand("sweep", "sample counts along one parameter axis");
    add_instance_flags(sweep, inst_opts);
    sweep->add_option("--axis", axis, "m | n | sigma | inv_eps");
    sweep->add_option("--values", values_text, "comma-separated axis values");

    auto* table1 = app.add_subcommand("table1", "per-binding / per-non-binding sample means");
    add_instance_flags(table1, inst_opts);

    auto* cdf = app.add_subcommand("cdf", "empirical CDF of Ellipsoid-UCB samples over the oracle line");
    add_instance_flags(cdf, inst_opts);

    auto* se = app.add_subcommand("succ-elim-bench", "successive elimination on unknown-c instances");
    add_instance_flags(se, inst_opts);
    se->add_option("--min-gap", inst_opts.min_gap, "minimum objective gap");
    se->add_option("--max-gap", inst_opts.max_gap, "maximum objective gap (0 = none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        g.tol().validate();
        g.run().ucb.validate();
        g.threads = resolve_threads(g.threads);

        if (*generate) {
            GeneratorConfig cfg = generator_from(inst_opts, 4, 80);
            cfg.seed = g.seed;
            emit(g, instance_to_json(generate_instance(cfg)) + "\n", out);
        } else if (*run) {
            LPInstance inst = [&] {
                try {
                    return load_instance(instance_path);
                } catch (const InfeasibleOrUnbounded& e) {
                    throw ValidationError(std::string("invalid instance: ") + e.what());
                }
            }();
            const RunReport r = run_algorithm(parse_algorithm(alg), inst, g.tol(), g.seed, g.run());
            emit(g, report_to_json(r) + "\n", out);
            if (!r.ok()) return 3;
        } else if (*sweep) {
            SweepConfig cfg;
            cfg.axis = parse_axis(axis);
            cfg.values = values_text.empty() ? std::vector<double>{} : parse_values(values_text);
            if (cfg.values.empty()) {
                switch (cfg.axis) {
                    case SweepAxis::M: cfg.values = {40, 80, 160}; break;
                    case SweepAxis::N: cfg.values = {2, 4, 6, 8}; break;
                    case SweepAxis::Sigma: cfg.values = {0.5, 1, 2, 4}; break;
                    case SweepAxis::InvEps: cfg.values = {5, 10, 20}; break;
                }
            }
            cfg.base = generator_from(inst_opts, 6, 80);
            cfg.trials = g.trials_or(50);
            cfg.tol = g.tol();
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            cfg.run = g.run();
            emit(g, sweep_csv(run_sweep(cfg)), out);
        } else if (*table1) {
            Table1Config cfg;
            cfg.base = generator_from(inst_opts, 4, 80);
            cfg.tol = g.tol();
            cfg.trials = g.trials_or(100);
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            cfg.run = g.run();
            emit(g, table1_csv(table1_report(cfg)), out);
        } else if (*cdf) {
            CdfConfig cfg;
            cfg.base = generator_from(inst_opts, 6, 80);
            cfg.tol = g.tol();
            cfg.trials = g.trials_or(500);
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            cfg.run = g.run();
            emit(g, cdf_csv(cdf_report(cfg)), out);
        } else if (*se) {
            SuccElimBenchConfig cfg;
            inst_opts.unknown = "c";
            if (inst_opts.min_gap == 0.0) inst_opts.min_gap = SuccElimBenchConfig{}.base.min_objective_gap;
            if (inst_opts.max_gap == 0.0) inst_opts.max_gap = SuccElimBenchConfig{}.base.max_objective_gap;
            cfg.base = generator_from(inst_opts, 3, 6);
            cfg.base.c_lo = SuccElimBenchConfig{}.base.c_lo;
            cfg.base.c_hi = SuccElimBenchConfig{}.base.c_hi;
            cfg.delta = g.delta;
            cfg.trials = g.trials_or(100);
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            emit(g, succ_elim_csv(succ_elim_bench(cfg)), out);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace aialo
