#pragma once

#include "aialo/lp_model.hpp"
#include "aialo/vertex_enum.hpp"

#include <vector>

namespace aialo {

// minimize sum_i tau_i  s.t.  sum_i weights[k]_i / tau_i <= bounds[k] for all k,
// tau >= 0, with the convention that a zero weight contributes zero.
struct AllocationProblem {
    std::vector<Vector> weights;
    std::vector<double> bounds;
};

struct TauAllocation {
    Vector tau;
    double objective = 0.0;
    // max of relative stationarity error, relative duality gap and relative
    // primal infeasibility of the returned point.
    double kkt_residual = 0.0;
};

// Interior-point solve in u = 1/tau, where the constraints become linear.
// Throws ValidationError on malformed data and Degenerate when every row is
// vacuous.
TauAllocation solve_allocation(const AllocationProblem& prob);

// max_k (sum_i weights[k]_i / tau_i) / bounds[k]; <= 1 means feasible.
double allocation_load(const AllocationProblem& prob, const Vector& tau);

struct LowResult {
    TauAllocation allocation;
    double low = 0.0;
    int optimal_vertex = -1;
};

// Rows (s - x*)^2 with bound (c^T (x* - s))^2 over every non-optimal vertex.
// Throws NonUniqueOptimum when the best vertex does not win by more than 1e-9.
AllocationProblem low_problem(const Vector& c, const VertexSet& vertices, int* optimal_vertex = nullptr);
LowResult low_of_instance(const LPInstance& inst, const VertexSet& vertices);

// Rows (x - y)^2 over unordered pairs of S, common bound eps^2 / (2 ln(2/delta)).
// Throws Degenerate when all points coincide.
AllocationProblem lowall_problem(const std::vector<Vector>& points, double eps, double delta);
TauAllocation lowall(const std::vector<Vector>& points, double eps, double delta);

}  // namespace aialo
