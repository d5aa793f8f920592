#include "aialo/errors.hpp"
#include "aialo/succ_elim.hpp"
#include "aialo/vertex_enum.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace aialo;
using namespace aialo::testing;

namespace {

int index_of(const VertexSet& v, const Vector& x) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if ((v.points[k] - x).lpNorm<Eigen::Infinity>() <= 1e-9) return static_cast<int>(k);
    return -1;
}

bool contains(const std::vector<int>& s, int k) { return std::find(s.begin(), s.end(), k) != s.end(); }

}  // namespace

TEST_SUITE("succ_elim") {
    TEST_CASE("objective gap on the unit square") {
        const VertexSet v = enumerate_vertices(unit_square(vec({1.0, 0.5})));
        CHECK(objective_gap(vec({1.0, 0.5}), v) == doctest::Approx(0.5));
        CHECK(objective_gap(vec({1.0, 1.0}), v) == doctest::Approx(1.0));
        CHECK(objective_gap(vec({1.0, -1.0}), v) == doctest::Approx(1.0));
        CHECK(objective_gap(vec({1.0, 0.0}), v) == doctest::Approx(0.0));
        VertexSet single;
        single.points.push_back(vec({0.0}));
        CHECK_THROWS_AS(objective_gap(vec({1.0}), single), ValidationError);
    }

    TEST_CASE("unit square with c = (1, 0.5)") {
        const LPInstance inst = unit_square(vec({1.0, 0.5}));
        const VertexSet v = enumerate_vertices(inst);
        const double gap = objective_gap(inst, v);
        const int round_limit = static_cast<int>(std::floor(std::log2(1.0 / gap))) + 1;
        int correct = 0;
        int max_rounds = 0;
        for (int t = 0; t < 100; ++t) {
            const RunReport r = run_successive_elimination(inst, 0.1, 500 + t);
            REQUIRE(r.ok());
            correct += (r.output - vec({1.0, 1.0})).norm() < 1e-9;
            max_rounds = std::max<int>(max_rounds, static_cast<int>(r.iterations));
        }
        CHECK(correct >= 90);
        CHECK(max_rounds <= round_limit);
    }

    TEST_CASE("degenerate noise keeps the optimum in every round") {
        std::mt19937_64 rng(79);
        for (int t = 0; t < 10; ++t) {
            LinearProgram lp = random_program(3, 4, rng);
            const LPInstance inst(std::move(lp), 100.0, UnknownSet::C, Vector::Constant(3, 1e-12));
            EliminationTrace trace;
            const RunReport r = run_successive_elimination(inst, 0.1, t, {}, &trace);
            REQUIRE(r.ok());
            CHECK((r.output - inst.optimum().point).norm() <= 1e-7);
            const int star = index_of(trace.vertices, inst.optimum().point);
            for (const auto& round : trace.rounds) CHECK(contains(round.survivors, star));
            CHECK(trace.final_survivors == std::vector<int>{star});
        }
    }

    TEST_CASE("round bookkeeping") {
        const LPInstance inst = make_c_instance(vec({1.0, 0.8, 0.3}), mat({{1.0, 1.0, 1.0}, {1.0, 0.0, 0.0}}),
                                                vec({2.0, 1.5}));
        EliminationTrace trace;
        const RunReport r = run_successive_elimination(inst, 0.1, 3, {}, &trace);
        REQUIRE(r.ok());
        REQUIRE(trace.rounds.size() == r.round_samples.size());
        std::int64_t sum = 0;
        const double s1 = static_cast<double>(trace.vertices.size());
        for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
            const EliminationRound& round = trace.rounds[k];
            const int rr = static_cast<int>(k) + 1;
            CHECK(round.round == rr);
            CHECK(round.eps == std::ldexp(1.0, -rr));
            CHECK(round.delta == doctest::Approx(0.1 / (10.0 * rr * rr * s1 * s1)));
            std::int64_t round_total = 0;
            for (Eigen::Index i = 0; i < round.tau.size(); ++i) {
                CHECK(round.samples[i] >= static_cast<std::int64_t>(std::ceil(round.tau(i))));
                if (round.samples[i] == 0) CHECK(round.c_hat(i) == 0.0);
                round_total += round.samples[i];
            }
            CHECK(round_total == r.round_samples[k]);
            sum += round_total;
            if (k + 1 < trace.rounds.size()) {
                for (int s : trace.rounds[k + 1].survivors) CHECK(contains(round.survivors, s));
            }
        }
        CHECK(sum == r.total_samples);
        std::int64_t per = 0;
        for (auto c : r.per_param_samples) per += c;
        CHECK(per == r.total_samples);
    }

    TEST_CASE("survivor containment frequency") {
        std::mt19937_64 rng(83);
        LinearProgram lp = random_program(2, 4, rng);
        const LPInstance inst(std::move(lp), 100.0, UnknownSet::C, Vector::Ones(2));
        const VertexSet v = enumerate_vertices(inst);
        const int star = index_of(v, inst.optimum().point);
        REQUIRE(star >= 0);
        int kept = 0;
        const int trials = 200;
        for (int t = 0; t < trials; ++t) {
            EliminationTrace trace;
            run_successive_elimination(inst, 0.1, 9000 + t, {}, &trace);
            bool ok = contains(trace.final_survivors, star);
            for (const auto& round : trace.rounds) ok = ok && contains(round.survivors, star);
            kept += ok;
        }
        CHECK(kept >= static_cast<int>(0.9 * trials));
    }

    TEST_CASE("early exit at eps_opt") {
        const LPInstance inst = unit_square(vec({1.0, 0.999}));
        EliminationConfig cfg;
        cfg.eps_opt = 0.1;
        const RunReport r = run_successive_elimination(inst, 0.1, 1, cfg);
        REQUIRE(r.ok());
        CHECK(r.iterations <= 5);
        CHECK(inst.objective().dot(r.output) >= inst.optimum().objective_value - 0.1);
    }

    TEST_CASE("round cap on a tied optimum") {
        const LPInstance inst = unit_square(vec({1.0, 0.0}));
        EliminationConfig cfg;
        cfg.max_rounds = 6;
        const RunReport r = run_successive_elimination(inst, 0.1, 1, cfg);
        CHECK_FALSE(r.ok());
        CHECK(r.failure == "round cap reached");
    }

    TEST_CASE("rejects unknown-b instances and bad delta") {
        const LPInstance b = unit_square(vec({1.0, 0.5}), UnknownSet::B);
        CHECK_THROWS_AS(run_successive_elimination(b, 0.1, 1), ValidationError);
        const LPInstance c = unit_square(vec({1.0, 0.5}));
        CHECK_THROWS_AS(run_successive_elimination(c, 1.5, 1), ValidationError);
    }

    TEST_CASE("determinism") {
        const LPInstance inst = unit_square(vec({1.0, 0.7}));
        const RunReport a = run_successive_elimination(inst, 0.1, 77);
        const RunReport b = run_successive_elimination(inst, 0.1, 77);
        CHECK(a.per_param_samples == b.per_param_samples);
        CHECK(a.round_samples == b.round_samples);
        CHECK(a.output == b.output);
    }
}
