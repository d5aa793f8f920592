#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace aialo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Raw data of  max c^T x  s.t.  A x <= b,  x >= 0.  No validation; used for
// empirical programs built from estimated parameters.
struct LinearProgram {
    Vector c;
    Matrix A;
    Vector b;

    int num_vars() const { return static_cast<int>(c.size()); }
    int num_constraints() const { return static_cast<int>(A.rows()); }
};

struct Solution {
    Vector point;
    double objective_value = 0.0;
};

enum class UnknownSet { B, C };

struct ToleranceParams {
    double delta = 0.1;
    double eps_opt = 0.1;   // optimality slack
    double eps_feas = 0.1;  // feasibility slack

    void validate() const;
};

// Exact optimum of a linear program in the  max / <= / x >= 0  form.
// Throws InfeasibleOrUnbounded.
Solution solve_exact(const LinearProgram& lp);

// An AIALO instance: the true LP plus which component is hidden, the noise
// scale of every hidden parameter, and an a-priori bound R on the optimum's
// norm. Immutable; the exact optimum is computed once at construction.
//
// known_rows marks constraint rows whose right-hand side is given to the
// algorithm even when the unknown set is B (for example appended box rows).
// Empty means "no known rows".
class LPInstance {
public:
    LPInstance(LinearProgram lp, double radius_bound, UnknownSet unknown, Vector noise_scale,
               std::vector<bool> known_rows = {});

    int num_vars() const { return lp_.num_vars(); }
    int num_constraints() const { return lp_.num_constraints(); }

    const LinearProgram& program() const { return lp_; }
    const Vector& objective() const { return lp_.c; }
    const Matrix& constraint_matrix() const { return lp_.A; }
    const Vector& rhs() const { return lp_.b; }
    double radius_bound() const { return radius_bound_; }
    UnknownSet unknown() const { return unknown_; }

    // One entry per parameter of the unknown component (m for B, n for C).
    const Vector& noise_scale() const { return noise_scale_; }
    int num_params() const { return static_cast<int>(noise_scale_.size()); }

    bool row_known(int i) const;
    const std::vector<bool>& known_rows() const { return known_rows_; }

    // Indices of the parameters an algorithm may sample.
    const std::vector<int>& unknown_params() const { return unknown_params_; }
    int num_unknown_params() const { return static_cast<int>(unknown_params_.size()); }

    // True values of the hidden component (b or c).
    const Vector& hidden_values() const { return unknown_ == UnknownSet::B ? lp_.b : lp_.c; }

    const Solution& optimum() const { return optimum_; }

private:
    LinearProgram lp_;
    double radius_bound_;
    UnknownSet unknown_;
    Vector noise_scale_;
    std::vector<bool> known_rows_;
    std::vector<int> unknown_params_;
    Solution optimum_;
};

// Returns the cached exact optimum of the true program.
inline const Solution& solve_exact(const LPInstance& inst) { return inst.optimum(); }

// Membership in OPT(I; eps_opt, eps_feas): eps_opt-optimal, every row of
// A x <= b and every sign constraint violated by at most eps_feas.
bool check_opt_membership(const LPInstance& inst, const Vector& x, const ToleranceParams& tol);

// Largest violation over A x <= b and x >= 0 (negative when strictly feasible).
double max_violation(const LinearProgram& lp, const Vector& x);

// Rows of A with |A_i x - b_i| <= tol, ascending.
std::vector<int> binding_set(const LPInstance& inst, const Vector& x_star, double tol);

}  // namespace aialo
