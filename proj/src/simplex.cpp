// Dense two-phase tableau simplex with Bland's rule. Serves as the exact
// reference solver for the true program of every instance.
#include "aialo/errors.hpp"
#include "aialo/lp_model.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace aialo {
namespace {

constexpr double kPivotEps = 1e-11;

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp)
        : m_(lp.num_constraints()),
          n_(lp.num_vars()),
          d_(Matrix::Zero(m_ + 2, n_ + 2)),
          basis_(m_),
          nonbasis_(n_ + 1) {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) d_(i, j) = lp.A(i, j);
            d_(i, n_) = -1.0;  // auxiliary variable of phase one
            d_(i, n_ + 1) = lp.b(i);
            basis_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[j] = j;
            d_(m_, j) = -lp.c(j);
        }
        nonbasis_[n_] = -1;
        d_(m_ + 1, n_) = 1.0;
    }

    Solution solve(const LinearProgram& lp) {
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (d_(i, n_ + 1) < d_(r, n_ + 1)) r = i;
        if (m_ > 0 && d_(r, n_ + 1) < -kPivotEps) {
            pivot(r, n_);
            if (!run(true) || d_(m_ + 1, n_ + 1) < -1e-9)
                throw InfeasibleOrUnbounded("linear program is infeasible");
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] != -1) continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j)
                    if (s == -1 || d_(i, j) < d_(i, s) ||
                        (d_(i, j) == d_(i, s) && nonbasis_[j] < nonbasis_[s]))
                        s = j;
                pivot(i, s);
            }
        }
        if (!run(false)) throw InfeasibleOrUnbounded("linear program is unbounded");

        Solution sol;
        sol.point = Vector::Zero(n_);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < n_) sol.point(basis_[i]) = d_(i, n_ + 1);
        sol.point = sol.point.cwiseMax(0.0);
        sol.objective_value = lp.c.dot(sol.point);
        return sol;
    }

private:
    void pivot(int r, int s) {
        const double inv = 1.0 / d_(r, s);
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || d_(i, s) == 0.0) continue;
            const double f = d_(i, s) * inv;
            for (int j = 0; j < n_ + 2; ++j)
                if (j != s) d_(i, j) -= d_(r, j) * f;
            d_(i, s) = -f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s) d_(r, j) *= inv;
        d_(r, s) = inv;
        std::swap(basis_[r], nonbasis_[s]);
    }

    // Bland's rule: lowest-labelled improving column, lowest-labelled
    // leaving row among ratio ties.
    bool run(bool phase_one) {
        const int obj = phase_one ? m_ + 1 : m_;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (!phase_one && nonbasis_[j] == -1) continue;
                if (d_(obj, j) < -kPivotEps && (s == -1 || nonbasis_[j] < nonbasis_[s])) s = j;
            }
            if (s == -1) return true;
            int r = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                if (d_(i, s) <= kPivotEps) continue;
                const double ratio = d_(i, n_ + 1) / d_(i, s);
                if (r == -1 || ratio < best - 1e-12) {
                    r = i;
                    best = ratio;
                } else if (ratio <= best + 1e-12 && basis_[i] < basis_[r]) {
                    r = i;
                    best = std::min(best, ratio);
                }
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }

    int m_;
    int n_;
    Matrix d_;
    std::vector<int> basis_;
    std::vector<int> nonbasis_;
};

}  // namespace

Solution solve_exact(const LinearProgram& lp) {
    if (lp.A.rows() != lp.b.size() || lp.A.cols() != lp.c.size())
        throw ValidationError("solve_exact: inconsistent dimensions");
    Tableau tab(lp);
    return tab.solve(lp);
}

}  // namespace aialo
