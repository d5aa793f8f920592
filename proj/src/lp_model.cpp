#include "aialo/lp_model.hpp"

#include "aialo/errors.hpp"

#include <cmath>
#include <string>

namespace aialo {

void ToleranceParams::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) throw_validation("delta must lie in (0, 1)");
    if (!(eps_opt >= 0.0)) throw_validation("eps_opt must be nonnegative");
    if (!(eps_feas >= 0.0)) throw_validation("eps_feas must be nonnegative");
}

LPInstance::LPInstance(LinearProgram lp, double radius_bound, UnknownSet unknown,
                       Vector noise_scale, std::vector<bool> known_rows)
    : lp_(std::move(lp)),
      radius_bound_(radius_bound),
      unknown_(unknown),
      noise_scale_(std::move(noise_scale)),
      known_rows_(std::move(known_rows)) {
    const int n = lp_.num_vars();
    const int m = lp_.num_constraints();
    if (n < 1 || m < 1) throw_validation("instance needs n >= 1 and m >= 1");
    if (lp_.A.cols() != n || lp_.b.size() != m)
        throw_validation("instance dimensions are inconsistent");
    if (!lp_.A.allFinite() || !lp_.b.allFinite() || !lp_.c.allFinite())
        throw_validation("instance contains non-finite values");
    if (!(radius_bound_ > 0.0)) throw_validation("radius bound R must be positive");

    if (known_rows_.empty()) known_rows_.assign(m, false);
    if (static_cast<int>(known_rows_.size()) != m)
        throw_validation("known_rows must have one entry per constraint");
    if (unknown_ == UnknownSet::C) known_rows_.assign(m, true);

    const int params = unknown_ == UnknownSet::B ? m : n;
    if (noise_scale_.size() == 1 && params > 1)
        noise_scale_ = Vector::Constant(params, noise_scale_(0));
    if (noise_scale_.size() != params)
        throw_validation("noise scale must be a scalar or have one entry per unknown parameter");

    for (int i = 0; i < params; ++i) {
        const bool hidden = unknown_ == UnknownSet::C || !known_rows_[i];
        if (!hidden) continue;
        if (!(noise_scale_(i) > 0.0) || !std::isfinite(noise_scale_(i)))
            throw_validation("noise scale of unknown parameter " + std::to_string(i) +
                             " must be positive");
        unknown_params_.push_back(i);
    }

    optimum_ = solve_exact(lp_);
    if (optimum_.point.norm() > radius_bound_ * (1.0 + 1e-12))
        throw InfeasibleOrUnbounded("optimum has norm above the radius bound R");
}

bool LPInstance::row_known(int i) const { return known_rows_.at(i); }

double max_violation(const LinearProgram& lp, const Vector& x) {
    double worst = -x.minCoeff();
    if (lp.num_constraints() > 0) worst = std::max(worst, (lp.A * x - lp.b).maxCoeff());
    return worst;
}

bool check_opt_membership(const LPInstance& inst, const Vector& x, const ToleranceParams& tol) {
    if (x.size() != inst.num_vars()) return false;
    if (!x.allFinite()) return false;
    const Vector& c = inst.objective();
    if (c.dot(x) < inst.optimum().objective_value - tol.eps_opt) return false;
    return max_violation(inst.program(), x) <= tol.eps_feas;
}

std::vector<int> binding_set(const LPInstance& inst, const Vector& x_star, double tol) {
    const Vector slack = inst.constraint_matrix() * x_star - inst.rhs();
    std::vector<int> out;
    for (int i = 0; i < slack.size(); ++i)
        if (std::abs(slack(i)) <= tol) out.push_back(i);
    return out;
}

}  // namespace aialo
