#include "aialo/errors.hpp"
#include "aialo/tau_solver.hpp"
#include "aialo/vertex_enum.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace aialo;
using namespace aialo::testing;

namespace {

void check_certificate(const AllocationProblem& p, const TauAllocation& r) {
    CHECK(r.kkt_residual <= 1e-6);
    CHECK(allocation_load(p, r.tau) <= 1.0 + 1e-6);
    CHECK(r.objective == doctest::Approx(r.tau.sum()).epsilon(1e-12));
    for (Eigen::Index i = 0; i < r.tau.size(); ++i) {
        bool weighted = false;
        for (const Vector& a : p.weights) weighted = weighted || a(i) > 0.0;
        if (weighted)
            CHECK(r.tau(i) > 0.0);
        else
            CHECK(r.tau(i) == 0.0);
    }
}

}  // namespace

TEST_SUITE("tau_solver") {
    TEST_CASE("single-row closed forms") {
        SUBCASE("one coordinate") {
            const AllocationProblem p{{vec({1.0, 0.0})}, {1.0}};
            const TauAllocation r = solve_allocation(p);
            CHECK(r.tau(0) == doctest::Approx(1.0).epsilon(1e-8));
            CHECK(r.tau(1) == 0.0);
            CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-8));
            check_certificate(p, r);
        }
        SUBCASE("two equal coordinates") {
            const AllocationProblem p{{vec({1.0, 1.0})}, {1.0}};
            const TauAllocation r = solve_allocation(p);
            CHECK(r.tau(0) == doctest::Approx(2.0).epsilon(1e-8));
            CHECK(r.tau(1) == doctest::Approx(2.0).epsilon(1e-8));
            CHECK(r.objective == doctest::Approx(4.0).epsilon(1e-8));
        }
        SUBCASE("random weights") {
            std::mt19937_64 rng(61);
            std::uniform_real_distribution<double> u(0.01, 3.0);
            for (int t = 0; t < 50; ++t) {
                const Vector a = vec({u(rng), u(rng), u(rng)});
                const double B = u(rng);
                const TauAllocation r = solve_allocation(AllocationProblem{{a}, {B}});
                const double root_sum = a.cwiseSqrt().sum();
                for (int i = 0; i < 3; ++i)
                    CHECK(r.tau(i) == doctest::Approx(std::sqrt(a(i)) * root_sum / B).epsilon(1e-6));
            }
        }
    }

    TEST_CASE("separable rows") {
        const AllocationProblem p{{vec({1.0, 0.0}), vec({0.0, 1.0})}, {1.0, 1.0}};
        const TauAllocation r = solve_allocation(p);
        CHECK(r.tau(0) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(r.tau(1) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(r.objective == doctest::Approx(2.0).epsilon(1e-8));
        check_certificate(p, r);
    }

    TEST_CASE("duplicate and dominated rows do not change the answer") {
        const AllocationProblem base{{vec({1.0, 2.0, 0.5})}, {1.0}};
        const AllocationProblem padded{{vec({1.0, 2.0, 0.5}), vec({1.0, 2.0, 0.5}), vec({0.5, 1.0, 0.1}), vec({2.0, 4.0, 1.0})},
                                       {1.0, 1.0, 1.0, 2.0}};
        CHECK(solve_allocation(padded).objective == doctest::Approx(solve_allocation(base).objective).epsilon(1e-8));
    }

    TEST_CASE("agreement with a grid oracle") {
        std::mt19937_64 rng(67);
        for (int t = 0; t < 40; ++t) {
            const int n = 1 + t % 3;
            const int rows = 1 + (t / 3) % 4;
            const AllocationProblem p = random_allocation_problem(rng, n, rows);
            const TauAllocation r = solve_allocation(p);
            const double grid = grid_allocation_optimum(p);
            CHECK(r.objective <= grid * 1.01);
            CHECK(r.objective >= grid * 0.99);
            check_certificate(p, r);
        }
    }

    TEST_CASE("dropping a row never increases the optimum") {
        std::mt19937_64 rng(71);
        for (int t = 0; t < 30; ++t) {
            AllocationProblem p = random_allocation_problem(rng, 3, 4);
            const double full = solve_allocation(p).objective;
            p.weights.pop_back();
            p.bounds.pop_back();
            CHECK(solve_allocation(p).objective <= full * (1.0 + 1e-7));
        }
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(solve_allocation(AllocationProblem{}), ValidationError);
        CHECK_THROWS_AS(solve_allocation(AllocationProblem{{vec({1.0})}, {0.0}}), ValidationError);
        CHECK_THROWS_AS(solve_allocation(AllocationProblem{{vec({-1.0})}, {1.0}}), ValidationError);
        CHECK_THROWS_AS(solve_allocation(AllocationProblem{{vec({1.0}), vec({1.0, 1.0})}, {1.0, 1.0}}), ValidationError);
        CHECK_THROWS_AS(solve_allocation(AllocationProblem{{vec({0.0, 0.0})}, {1.0}}), Degenerate);
    }

    TEST_CASE("lowall closed form") {
        const std::vector<Vector> S{vec({0.0, 0.0}), vec({1.0, 0.0})};
        const AllocationProblem p = lowall_problem(S, 0.1, 0.01);
        REQUIRE(p.bounds.size() == 1u);
        const double B = 0.01 / (2.0 * std::log(200.0));
        CHECK(p.bounds[0] == doctest::Approx(9.4366e-4).epsilon(1e-4));
        CHECK(p.bounds[0] == doctest::Approx(B).epsilon(1e-14));
        const TauAllocation r = lowall(S, 0.1, 0.01);
        CHECK(r.tau(0) == doctest::Approx(1059.7).epsilon(1e-4));
        CHECK(r.tau(0) == doctest::Approx(1.0 / B).epsilon(1e-8));
        CHECK(r.tau(1) == 0.0);
    }

    TEST_CASE("lowall scaling and shared coordinates") {
        const std::vector<Vector> S{vec({0.0, 1.0, 2.0}), vec({1.0, 1.0, 0.0}), vec({0.5, 1.0, 1.0})};
        const double half = lowall(S, 0.05, 0.1).objective;
        const double full = lowall(S, 0.1, 0.1).objective;
        CHECK(half == doctest::Approx(4.0 * full).epsilon(1e-7));
        CHECK(lowall(S, 0.1, 0.1).tau(1) == 0.0);
        CHECK_THROWS_AS(lowall({vec({1.0, 1.0}), vec({1.0, 1.0})}, 0.1, 0.1), Degenerate);
        CHECK_THROWS_AS(lowall({vec({1.0, 1.0})}, 0.1, 0.1), ValidationError);
        CHECK_THROWS_AS(lowall(S, 0.0, 0.1), ValidationError);
    }

    TEST_CASE("Low of the unit square") {
        const LPInstance inst = unit_square(vec({1.0, 0.5}));
        const VertexSet v = enumerate_vertices(inst);
        const LowResult low = low_of_instance(inst, v);
        CHECK(v.points[low.optimal_vertex].isApprox(vec({1.0, 1.0})));
        const AllocationProblem p = low_problem(inst.objective(), v);
        CHECK(p.weights.size() == 3u);
        check_certificate(p, low.allocation);
        CHECK(low.low == doctest::Approx(grid_allocation_optimum(p)).epsilon(0.01));
        // Rows: (0,0) -> a=(1,1), B=2.25; (1,0) -> a=(0,1), B=0.25; (0,1) -> a=(1,0), B=1.
        // Separable rows force tau >= (1, 4), which already satisfies the first row.
        CHECK(low.low == doctest::Approx(5.0).epsilon(1e-7));
    }

    TEST_CASE("Low scales inversely with the square of c") {
        const LPInstance a = unit_square(vec({1.0, 0.5}));
        const LPInstance b = unit_square(vec({3.0, 1.5}));
        const double la = low_of_instance(a, enumerate_vertices(a)).low;
        const double lb = low_of_instance(b, enumerate_vertices(b)).low;
        CHECK(lb == doctest::Approx(la / 9.0).epsilon(1e-7));
    }

    TEST_CASE("Low of a simplex corner") {
        const LPInstance inst = make_c_instance(vec({1.0, 0.0, 0.0}), mat({{1.0, 1.0, 1.0}}), vec({1.0}));
        // Vertices 0, e1, e2, e3. Objective ties between 0, e2 and e3 do not matter; only x* must be unique.
        const VertexSet v = enumerate_vertices(inst);
        const LowResult low = low_of_instance(inst, v);
        CHECK(v.points[low.optimal_vertex].isApprox(vec({1.0, 0.0, 0.0})));
        CHECK(low.low > 0.0);
        const LPInstance line = make_c_instance(vec({1.0}), mat({{1.0}}), vec({1.0}));
        CHECK(low_of_instance(line, enumerate_vertices(line)).low == doctest::Approx(1.0).epsilon(1e-8));
    }

    TEST_CASE("non-unique optimum is rejected") {
        const LPInstance inst = unit_square(vec({1.0, 0.0}));
        CHECK_THROWS_AS(low_of_instance(inst, enumerate_vertices(inst)), NonUniqueOptimum);
    }

    TEST_CASE("lowall over near-optimal points is bounded by a multiple of Low") {
        std::mt19937_64 rng(73);
        int checked = 0;
        for (int t = 0; t < 40; ++t) {
            LinearProgram lp = random_program(3, 4, rng);
            const LPInstance inst(std::move(lp), 100.0, UnknownSet::C, Vector::Ones(3));
            const VertexSet v = enumerate_vertices(inst);
            double low = 0.0;
            try {
                low = low_of_instance(inst, v).low;
            } catch (const NonUniqueOptimum&) {
                continue;
            }
            const double best = inst.optimum().objective_value;
            for (double eps : {0.25, 0.5, 1.0}) {
                std::vector<Vector> S;
                for (const Vector& p : v.points)
                    if (best - inst.objective().dot(p) < eps) S.push_back(p);
                if (S.size() < 2) continue;
                const double lambda = 10.0, dp = 0.01;
                const double lhs = lowall(S, eps / lambda, dp).objective;
                CHECK(lhs <= 32.0 * lambda * lambda * std::log(2.0 / dp) * low * (1.0 + 1e-9));
                ++checked;
            }
        }
        CHECK(checked > 10);
    }
}
