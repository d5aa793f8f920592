#include "aialo/errors.hpp"
#include "aialo/vertex_enum.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace aialo;
using namespace aialo::testing;

namespace {

bool same_point_set(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    if (a.size() != b.size()) return false;
    for (const Vector& p : a) {
        const bool found = std::any_of(b.begin(), b.end(), [&](const Vector& q) {
            return (p - q).lpNorm<Eigen::Infinity>() <= 1e-6;
        });
        if (!found) return false;
    }
    return true;
}

int active_rows(const LinearProgram& lp, const Vector& x) {
    int k = 0;
    const Vector s = lp.A * x - lp.b;
    for (Eigen::Index i = 0; i < s.size(); ++i) k += std::abs(s(i)) <= 1e-7;
    for (Eigen::Index i = 0; i < x.size(); ++i) k += std::abs(x(i)) <= 1e-7;
    return k;
}

}  // namespace

TEST_SUITE("vertex_enum") {
    TEST_CASE("unit square") {
        const VertexSet v = enumerate_vertices(LinearProgram{vec({1.0, 1.0}), Matrix::Identity(2, 2), vec({1.0, 1.0})});
        REQUIRE(v.size() == 4u);
        CHECK(v.points[0].isApprox(vec({0.0, 0.0})));
        CHECK(v.points[1].isApprox(vec({0.0, 1.0})));
        CHECK(v.points[2].isApprox(vec({1.0, 0.0})));
        CHECK(v.points[3].isApprox(vec({1.0, 1.0})));
        CHECK(v.basis_records.size() == 4u);
    }

    TEST_CASE("simplex") {
        const VertexSet v = enumerate_vertices(LinearProgram{vec({1.0, 1.0}), mat({{1.0, 1.0}}), vec({1.0})});
        CHECK(v.size() == 3u);
    }

    TEST_CASE("degenerate apex is reported once") {
        // Square pyramid apex: four facets through (1,1,1) in three dimensions.
        const LinearProgram lp{vec({0.0, 0.0, 1.0}),
                               mat({{0.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}),
                               vec({1.0, 2.0, 2.0, 3.0})};
        const VertexSet v = enumerate_vertices(lp);
        const auto apex = std::count_if(v.points.begin(), v.points.end(),
                                        [](const Vector& p) { return (p - vec({1.0, 1.0, 1.0})).norm() < 1e-9; });
        CHECK(apex == 1);
    }

    TEST_CASE("random instances match an independent enumeration") {
        std::mt19937_64 rng(41);
        for (int t = 0; t < 30; ++t) {
            const LinearProgram lp = random_program(3, 6, rng);
            const VertexSet v = enumerate_vertices(lp);
            CHECK(same_point_set(v.points, brute_force_vertices(lp)));
            for (const Vector& p : v.points) {
                CHECK(max_violation(lp, p) <= 1e-7);
                CHECK(active_rows(lp, p) >= 3);
            }
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    CHECK((v.points[i] - v.points[j]).lpNorm<Eigen::Infinity>() > 1e-6);
            double best = -1e300;
            for (const Vector& p : v.points) best = std::max(best, lp.c.dot(p));
            CHECK(best == doctest::Approx(solve_exact(lp).objective_value).epsilon(1e-8).scale(1.0));
        }
    }

    TEST_CASE("vertex set is invariant under row permutation") {
        std::mt19937_64 rng(43);
        for (int t = 0; t < 15; ++t) {
            const LinearProgram lp = random_program(3, 6, rng);
            std::vector<int> perm(lp.num_constraints());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            LinearProgram q = lp;
            for (int i = 0; i < lp.num_constraints(); ++i) {
                q.A.row(i) = lp.A.row(perm[i]);
                q.b(i) = lp.b(perm[i]);
            }
            const VertexSet a = enumerate_vertices(lp);
            const VertexSet b = enumerate_vertices(q);
            CHECK(same_point_set(a.points, b.points));
            // Deterministic ordering makes the lists identical, not just equal as sets.
            for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
                CHECK((a.points[k] - b.points[k]).lpNorm<Eigen::Infinity>() <= 1e-9);
        }
    }

    TEST_CASE("limits") {
        std::mt19937_64 rng(47);
        const LinearProgram lp = random_program(4, 30, rng);
        CHECK_THROWS_AS(enumerate_vertices(lp, VertexEnumLimits{.max_dim = 3}), CombinatorialBlowup);
        CHECK_THROWS_AS(enumerate_vertices(lp, VertexEnumLimits{.max_subsets = 100}), CombinatorialBlowup);
    }

    TEST_CASE("binomial") {
        CHECK(binomial(5, 2) == 10.0);
        CHECK(binomial(10, 0) == 1.0);
        CHECK(binomial(3, 4) == 0.0);
        CHECK(binomial(40, 20) == doctest::Approx(137846528820.0));
    }
}
