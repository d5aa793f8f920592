#pragma once

#include "aialo/lp_model.hpp"

#include <cstdint>

namespace aialo {

// E = { x : (x - center)^T shape^{-1} (x - center) <= 1 }.
struct EllipsoidState {
    Vector center;
    Matrix shape;
    std::int64_t iteration = 0;

    int dim() const { return static_cast<int>(center.size()); }

    // log volume up to the unit-ball constant: 0.5 * log det(shape).
    double log_volume() const;

    // (p - z)^T Q^{-1} (p - z).
    double mahalanobis_sq(const Vector& p) const;
};

// Ball of radius R around the origin.
EllipsoidState initial_ellipsoid(int n, double radius);
EllipsoidState initial_ellipsoid(const LPInstance& inst);

// Minimal ellipsoid containing E ∩ { p : y^T p <= y^T center }.
// Throws NumericalBreakdown when y^T Q y is not safely positive or the
// updated shape is no longer positive definite.
EllipsoidState central_cut(const EllipsoidState& state, const Vector& y);

// sqrt(c^T Q c) <= eps: the objective varies by at most eps over E.
bool should_stop(const EllipsoidState& state, const Vector& c, double eps);

// ceil(2n(n+1) ln(R |c| sqrt(n) / eps)) + 10n.
std::int64_t iteration_cap(int n, double radius, double c_norm, double eps);

// Normal of the combined constraint row j: rows 0..m-1 are A, rows m..m+n-1
// are the sign constraints -x_k <= 0.
Vector constraint_normal(const LinearProgram& lp, int j);

// Deterministic ellipsoid method with exact right-hand sides. Stops once the
// stopping rule holds and the best feasible center is certified to be within
// eps of the best objective value the ellipsoid still admits.
// Throws IterationCap.
Solution solve_lp_ellipsoid(const LinearProgram& lp, double radius, double eps);
Solution solve_lp_ellipsoid(const LPInstance& inst, double eps);

}  // namespace aialo
