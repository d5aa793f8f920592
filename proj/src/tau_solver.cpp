#include "aialo/tau_solver.hpp"

#include "aialo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace aialo {
namespace {

// Rows normalized to bound 1, restricted to coordinates that carry weight.
struct ReducedProblem {
    std::vector<int> coords;  // active coordinate of each reduced variable
    Matrix rows;              // K x d, nonnegative
};

ReducedProblem reduce(const AllocationProblem& prob, int n) {
    std::vector<Vector> normalized;
    for (std::size_t k = 0; k < prob.weights.size(); ++k) {
        if ((prob.weights[k].array() > 0.0).any()) normalized.push_back(prob.weights[k] / prob.bounds[k]);
    }
    if (normalized.empty()) throw Degenerate("allocation problem has only vacuous rows");

    // Drop duplicates and rows dominated componentwise by another row.
    std::vector<bool> keep(normalized.size(), true);
    for (std::size_t k = 0; k < normalized.size(); ++k) {
        for (std::size_t l = 0; l < normalized.size() && keep[k]; ++l) {
            if (l == k || !keep[l]) continue;
            const bool dominated = (normalized[k].array() <= normalized[l].array()).all();
            const bool equal = dominated && (normalized[k].array() == normalized[l].array()).all();
            if (dominated && (!equal || l < k)) keep[k] = false;
        }
    }

    ReducedProblem out;
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < normalized.size(); ++k)
            if (keep[k] && normalized[k](i) > 0.0) {
                out.coords.push_back(i);
                break;
            }
    }
    const int d = static_cast<int>(out.coords.size());
    const int kept = static_cast<int>(std::count(keep.begin(), keep.end(), true));
    out.rows.resize(kept, d);
    int r = 0;
    for (std::size_t k = 0; k < normalized.size(); ++k) {
        if (!keep[k]) continue;
        for (int j = 0; j < d; ++j) out.rows(r, j) = normalized[k](out.coords[j]);
        ++r;
    }
    return out;
}

// Log-barrier path following for  min sum 1/u  s.t.  rows * u <= 1.
struct BarrierResult {
    Vector u;
    Vector lambda;
    double t = 0.0;
};

// Newton iterations on the KKT equations of the rows that are tight at the
// barrier point: u_j^2 (R_A^T lambda)_j = 1 and R_A u = 1. The barrier
// multipliers lose precision once slacks approach rounding level, so the
// polished pair replaces them whenever it stays primal and dual feasible.
void polish(const Matrix& rows, BarrierResult& res) {
    const int k_rows = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());
    const Vector slack = Vector::Ones(k_rows) - rows * res.u;
    std::vector<int> active;
    for (int k = 0; k < k_rows; ++k)
        if (slack(k) <= 1e-5) active.push_back(k);
    const int a = static_cast<int>(active.size());
    if (a == 0) return;

    Matrix ra(a, d);
    Vector lam(a);
    for (int r = 0; r < a; ++r) {
        ra.row(r) = rows.row(active[r]);
        lam(r) = res.lambda(active[r]);
    }
    Vector u = res.u;
    auto residual = [&](const Vector& uu, const Vector& ll) {
        Vector f(d + a);
        f.head(d) = uu.array().square().matrix().cwiseProduct(ra.transpose() * ll) - Vector::Ones(d);
        f.tail(a) = ra * uu - Vector::Ones(a);
        return f;
    };
    for (int iter = 0; iter < 50; ++iter) {
        const Vector f = residual(u, lam);
        if (f.lpNorm<Eigen::Infinity>() <= 1e-15) break;
        Matrix jac = Matrix::Zero(d + a, d + a);
        const Vector rl = ra.transpose() * lam;
        for (int j = 0; j < d; ++j) jac(j, j) = 2.0 * u(j) * rl(j);
        jac.topRightCorner(d, a) = u.array().square().matrix().asDiagonal() * ra.transpose();
        jac.bottomLeftCorner(a, d) = ra;
        const Vector step = jac.completeOrthogonalDecomposition().solve(-f);
        if (!step.allFinite()) return;
        u += step.head(d);
        lam += step.tail(a);
    }
    if (!u.allFinite() || !lam.allFinite() || (u.array() <= 0.0).any()) return;
    if ((lam.array() < -1e-12).any()) return;
    if (((rows * u).array() > 1.0 + 1e-12).any()) return;
    if (residual(u, lam).lpNorm<Eigen::Infinity>() > 1e-9) return;

    res.u = u;
    res.lambda = Vector::Zero(k_rows);
    for (int r = 0; r < a; ++r) res.lambda(active[r]) = std::max(0.0, lam(r));
}

BarrierResult barrier_solve(const Matrix& rows) {
    const int k_rows = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());

    Vector u(d);
    for (int j = 0; j < d; ++j) u(j) = 1.0 / (2.0 * d * rows.col(j).maxCoeff());

    double t = k_rows / u.cwiseInverse().sum();
    constexpr double kGrowth = 5.0;
    constexpr double kInnerTol = 1e-10;
    constexpr double kGapTol = 1e-10;

    for (int outer = 0; outer < 200; ++outer) {
        for (int inner = 0; inner < 500; ++inner) {
            const Vector slack = Vector::Ones(k_rows) - rows * u;
            const Vector inv_s = slack.cwiseInverse();
            const Vector grad = -t * u.array().square().inverse().matrix() + rows.transpose() * inv_s;
            Matrix hess = rows.transpose() * inv_s.array().square().matrix().asDiagonal() * rows;
            hess.diagonal() += (2.0 * t) * u.array().cube().inverse().matrix();

            // Newton step in variables scaled by u keeps the system well conditioned.
            const Vector scale = u;
            const Matrix hs = scale.asDiagonal() * hess * scale.asDiagonal();
            const Vector gs = scale.cwiseProduct(grad);
            const Vector step_s = hs.ldlt().solve(-gs);
            const Vector step = scale.cwiseProduct(step_s);
            const double decrement = std::sqrt(std::max(0.0, -gs.dot(step_s)));
            if (decrement * decrement / 2.0 <= kInnerTol) break;

            double alpha = decrement > 0.25 ? 1.0 / (1.0 + decrement) : 1.0;
            for (int back = 0; back < 100; ++back) {
                const Vector cand = u + alpha * step;
                if ((cand.array() > 0.0).all() && ((rows * cand).array() < 1.0).all()) break;
                alpha *= 0.5;
            }
            u += alpha * step;
        }
        const double f = u.cwiseInverse().sum();
        if (k_rows / t <= kGapTol * f) break;
        t *= kGrowth;
    }

    BarrierResult out;
    out.u = u;
    out.t = t;
    out.lambda = (t * (Vector::Ones(k_rows) - rows * u)).cwiseInverse();
    polish(rows, out);
    return out;
}

void validate(const AllocationProblem& prob, int n) {
    if (prob.weights.empty()) throw ValidationError("allocation problem needs at least one row");
    if (prob.weights.size() != prob.bounds.size())
        throw ValidationError("allocation problem: one bound per row required");
    for (std::size_t k = 0; k < prob.weights.size(); ++k) {
        if (prob.weights[k].size() != n) throw ValidationError("allocation problem: ragged rows");
        if (!prob.weights[k].allFinite() || (prob.weights[k].array() < 0.0).any())
            throw ValidationError("allocation problem: weights must be finite and nonnegative");
        if (!(prob.bounds[k] > 0.0) || !std::isfinite(prob.bounds[k]))
            throw ValidationError("allocation problem: bounds must be positive");
    }
}

}  // namespace

double allocation_load(const AllocationProblem& prob, const Vector& tau) {
    double worst = 0.0;
    for (std::size_t k = 0; k < prob.weights.size(); ++k) {
        double load = 0.0;
        for (Eigen::Index i = 0; i < tau.size(); ++i) {
            const double a = prob.weights[k](i);
            if (a == 0.0) continue;
            load += tau(i) > 0.0 ? a / tau(i) : std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, load / prob.bounds[k]);
    }
    return worst;
}

TauAllocation solve_allocation(const AllocationProblem& prob) {
    const int n = prob.weights.empty() ? 0 : static_cast<int>(prob.weights.front().size());
    validate(prob, n);
    const ReducedProblem red = reduce(prob, n);
    const BarrierResult sol = barrier_solve(red.rows);

    TauAllocation out;
    out.tau = Vector::Zero(n);
    const int d = static_cast<int>(red.coords.size());
    for (int j = 0; j < d; ++j) out.tau(red.coords[j]) = 1.0 / sol.u(j);
    out.objective = out.tau.sum();

    // Stationarity in tau: 1 = sum_k lambda_k a_ki / tau_i^2 on active coordinates.
    double stationarity = 0.0;
    for (int j = 0; j < d; ++j) {
        const double tau = 1.0 / sol.u(j);
        const double s = red.rows.col(j).dot(sol.lambda) / (tau * tau);
        stationarity = std::max(stationarity, std::abs(1.0 - s));
    }
    const Vector slack = Vector::Ones(red.rows.rows()) - red.rows * sol.u;
    const double gap = sol.lambda.dot(slack) / out.objective;
    const double infeasibility = std::max(0.0, allocation_load(prob, out.tau) - 1.0);
    out.kkt_residual = std::max({stationarity, gap, infeasibility});
    return out;
}

AllocationProblem low_problem(const Vector& c, const VertexSet& vertices, int* optimal_vertex) {
    const int count = static_cast<int>(vertices.size());
    if (count < 2) throw ValidationError("Low(I) needs at least two extreme points");
    int best = 0;
    for (int k = 1; k < count; ++k)
        if (c.dot(vertices.points[k]) > c.dot(vertices.points[best])) best = k;
    const Vector& xs = vertices.points[best];
    const double best_value = c.dot(xs);

    AllocationProblem prob;
    for (int k = 0; k < count; ++k) {
        if (k == best) continue;
        const double gap = best_value - c.dot(vertices.points[k]);
        if (!(gap > 1e-9)) throw NonUniqueOptimum("Low(I): optimal extreme point is not unique");
        prob.weights.push_back((vertices.points[k] - xs).array().square().matrix());
        prob.bounds.push_back(gap * gap);
    }
    if (optimal_vertex) *optimal_vertex = best;
    return prob;
}

LowResult low_of_instance(const LPInstance& inst, const VertexSet& vertices) {
    LowResult out;
    const AllocationProblem prob = low_problem(inst.objective(), vertices, &out.optimal_vertex);
    out.allocation = solve_allocation(prob);
    out.low = out.allocation.objective;
    return out;
}

AllocationProblem lowall_problem(const std::vector<Vector>& points, double eps, double delta) {
    if (points.size() < 2) throw ValidationError("LowAll needs at least two points");
    if (!(eps > 0.0)) throw ValidationError("LowAll needs eps > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("LowAll needs delta in (0, 1)");
    const double bound = eps * eps / (2.0 * std::log(2.0 / delta));
    AllocationProblem prob;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            Vector w = (points[a] - points[b]).array().square().matrix();
            if ((w.array() == 0.0).all()) continue;
            prob.weights.push_back(std::move(w));
            prob.bounds.push_back(bound);
        }
    if (prob.weights.empty()) throw Degenerate("LowAll: all points coincide");
    return prob;
}

TauAllocation lowall(const std::vector<Vector>& points, double eps, double delta) {
    return solve_allocation(lowall_problem(points, eps, delta));
}

}  // namespace aialo
