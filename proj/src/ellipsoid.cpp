#include "aialo/ellipsoid.hpp"

#include "aialo/errors.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace aialo {

double EllipsoidState::log_volume() const {
    Eigen::LLT<Matrix> llt(shape);
    if (llt.info() != Eigen::Success) throw NumericalBreakdown("ellipsoid shape is not positive definite");
    return llt.matrixLLT().diagonal().array().log().sum();
}

double EllipsoidState::mahalanobis_sq(const Vector& p) const {
    const Vector d = p - center;
    return d.dot(shape.llt().solve(d));
}

EllipsoidState initial_ellipsoid(int n, double radius) {
    if (!(radius > 0.0)) throw ValidationError("initial ellipsoid needs R > 0");
    EllipsoidState s;
    s.center = Vector::Zero(n);
    s.shape = Matrix::Identity(n, n) * (radius * radius);
    s.iteration = 0;
    return s;
}

EllipsoidState initial_ellipsoid(const LPInstance& inst) {
    return initial_ellipsoid(inst.num_vars(), inst.radius_bound());
}

EllipsoidState central_cut(const EllipsoidState& state, const Vector& y) {
    const int n = state.dim();
    if (y.size() != n) throw ValidationError("central cut: direction has the wrong dimension");
    const Vector qy = state.shape * y;
    const double yqy = y.dot(qy);
    if (!(yqy > 0.0) || !std::isfinite(yqy)) throw NumericalBreakdown("central cut: y^T Q y is not positive");
    const Vector g = qy / std::sqrt(yqy);

    EllipsoidState next;
    next.iteration = state.iteration + 1;
    if (n == 1) {
        next.center = state.center - 0.5 * g;
        next.shape = 0.25 * state.shape;
        return next;
    }
    const double nd = n;
    next.center = state.center - g / (nd + 1.0);
    next.shape = (nd * nd / (nd * nd - 1.0)) * (state.shape - (2.0 / (nd + 1.0)) * g * g.transpose());
    next.shape = 0.5 * (next.shape + next.shape.transpose()).eval();
    if (next.shape.llt().info() != Eigen::Success)
        throw NumericalBreakdown("central cut: shape lost positive definiteness");
    return next;
}

bool should_stop(const EllipsoidState& state, const Vector& c, double eps) {
    return std::sqrt(std::max(0.0, c.dot(state.shape * c))) <= eps;
}

std::int64_t iteration_cap(int n, double radius, double c_norm, double eps) {
    const double arg = radius * c_norm * std::sqrt(static_cast<double>(n)) / eps;
    const double logs = arg > 1.0 ? std::log(arg) : 0.0;
    return static_cast<std::int64_t>(std::ceil(2.0 * n * (n + 1) * logs)) + 10 * n;
}

Vector constraint_normal(const LinearProgram& lp, int j) {
    const int m = lp.num_constraints();
    if (j < 0 || j >= m + lp.num_vars()) throw ValidationError("constraint index out of range");
    if (j < m) return lp.A.row(j).transpose();
    Vector y = Vector::Zero(lp.num_vars());
    y(j - m) = -1.0;
    return y;
}

Solution solve_lp_ellipsoid(const LinearProgram& lp, double radius, double eps) {
    if (!(eps > 0.0)) throw ValidationError("solve_lp_ellipsoid needs eps > 0");
    const int n = lp.num_vars();
    const int m = lp.num_constraints();
    const double c_norm = lp.c.norm();
    if (c_norm == 0.0) return Solution{Vector::Zero(n), 0.0};

    const std::int64_t cap = iteration_cap(n, radius, c_norm, eps);
    EllipsoidState state = initial_ellipsoid(n, radius);
    std::optional<Solution> best;

    while (state.iteration < cap) {
        const Vector& z = state.center;
        const double width = std::sqrt(std::max(0.0, lp.c.dot(state.shape * lp.c)));
        if (width <= eps && best && best->objective_value >= lp.c.dot(z) + width - eps) return *best;

        int worst = -1;
        double worst_violation = 1e-9;
        const Vector slack = lp.A * z - lp.b;
        for (int i = 0; i < m; ++i)
            if (slack(i) > worst_violation) worst_violation = slack(i), worst = i;
        for (int k = 0; k < n; ++k)
            if (-z(k) > worst_violation) worst_violation = -z(k), worst = m + k;

        Vector y;
        if (worst < 0) {
            const double value = lp.c.dot(z);
            if (!best || value > best->objective_value) best = Solution{z, value};
            y = -lp.c;
        } else {
            y = constraint_normal(lp, worst);
        }
        state = central_cut(state, y);
    }
    throw IterationCap("ellipsoid solver exceeded its iteration cap");
}

Solution solve_lp_ellipsoid(const LPInstance& inst, double eps) {
    Solution s = solve_lp_ellipsoid(inst.program(), inst.radius_bound(), eps);
    s.objective_value = inst.objective().dot(s.point);
    return s;
}

}  // namespace aialo
