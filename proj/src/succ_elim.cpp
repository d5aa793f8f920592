#include "aialo/succ_elim.hpp"

#include "aialo/errors.hpp"
#include "aialo/sampling.hpp"
#include "aialo/tau_solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace aialo {
namespace {

// Coordinate i takes one value across every point of the set.
bool coordinate_constant(const VertexSet& v, const std::vector<int>& set, int i) {
    for (int k : set)
        if (std::abs(v.points[k](i) - v.points[set.front()](i)) > 1e-12) return false;
    return true;
}

}  // namespace

double objective_gap(const Vector& c, const VertexSet& vertices) {
    if (vertices.size() < 2) throw ValidationError("objective gap needs at least two vertices");
    double best = -std::numeric_limits<double>::infinity();
    double second = -std::numeric_limits<double>::infinity();
    for (const Vector& p : vertices.points) {
        const double v = c.dot(p);
        if (v > best) {
            second = best;
            best = v;
        } else if (v > second) {
            second = v;
        }
    }
    return best - second;
}

RunReport run_successive_elimination(const LPInstance& inst, double delta, std::uint64_t seed,
                                     const EliminationConfig& cfg, EliminationTrace* trace) {
    if (inst.unknown() != UnknownSet::C)
        throw ValidationError("successive elimination needs an unknown-c instance");
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
    const auto start = std::chrono::steady_clock::now();
    const int n = inst.num_vars();

    RunReport report;
    report.algorithm = "succ_elim";
    report.seed = seed;

    const VertexSet vertices = enumerate_vertices(inst, cfg.limits);
    if (trace) *trace = EliminationTrace{vertices, {}, {}};
    const double s1 = static_cast<double>(vertices.size());

    std::vector<int> survivors(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) survivors[k] = static_cast<int>(k);

    NoisyOracle oracle = NoisyOracle::for_instance(inst, seed);
    SampleLedger total(n);
    int leader = survivors.empty() ? -1 : survivors.front();
    int round = 1;

    auto finish = [&](RunStatus status, std::string why) {
        report.status = status;
        report.failure = std::move(why);
        report.iterations = round - 1;
        report.per_param_samples = total.counts();
        report.total_samples = total.total();
        if (status == RunStatus::Ok) report.output = vertices.points.at(leader);
        if (trace) trace->final_survivors = survivors;
        report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    if (vertices.size() == 0) return finish(RunStatus::Failure, "feasible region has no extreme point");

    while (survivors.size() > 1) {
        if (round > cfg.max_rounds) return finish(RunStatus::Failure, "round cap reached");
        const double eps = std::ldexp(1.0, -round);
        if (cfg.eps_opt && eps < *cfg.eps_opt / 2.0) break;
        const double round_delta = delta / (10.0 * round * round * s1 * s1);

        std::vector<Vector> points;
        for (int k : survivors) points.push_back(vertices.points[k]);
        const TauAllocation alloc = lowall(points, eps / cfg.lambda, round_delta);

        EliminationRound rec;
        rec.round = round;
        rec.eps = eps;
        rec.delta = round_delta;
        rec.survivors = survivors;
        rec.tau = alloc.tau;
        rec.samples.assign(n, 0);
        rec.c_hat = Vector::Zero(n);

        for (int i = 0; i < n; ++i) {
            double draws = std::ceil(alloc.tau(i));
            if (draws == 0.0 && !coordinate_constant(vertices, survivors, i)) draws = 1.0;
            if (draws == 0.0) continue;
            if (draws > 9e18) return finish(RunStatus::Failure, "sample allocation overflow");
            const auto count = static_cast<std::int64_t>(draws);
            SampleLedger fresh(n);
            rec.c_hat(i) = oracle.draw_mean(fresh, i, count);
            total.record_batch(i, count, fresh.sum(i));
            rec.samples[i] = count;
        }

        leader = survivors.front();
        double best = rec.c_hat.dot(vertices.points[leader]);
        for (int k : survivors) {
            const double v = rec.c_hat.dot(vertices.points[k]);
            if (v > best) best = v, leader = k;
        }
        rec.leader = leader;
        const double threshold = best - eps / 2.0 - 2.0 * eps / cfg.lambda;
        std::vector<int> next;
        for (int k : survivors)
            if (rec.c_hat.dot(vertices.points[k]) >= threshold) next.push_back(k);
        survivors = std::move(next);

        std::int64_t round_total = 0;
        for (auto s : rec.samples) round_total += s;
        report.round_samples.push_back(round_total);
        if (trace) trace->rounds.push_back(std::move(rec));
        ++round;
    }
    if (survivors.size() == 1) leader = survivors.front();
    return finish(RunStatus::Ok, {});
}

}  // namespace aialo
