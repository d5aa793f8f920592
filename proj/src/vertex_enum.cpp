#include "aialo/vertex_enum.hpp"

#include "aialo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aialo {
namespace {

constexpr double kFeasTol = 1e-7;
constexpr double kDupTol = 1e-6;

bool advance(std::vector<int>& idx, int total) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == total - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

bool lex_less(const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ra = std::round(a(i) * 1e9);
        const double rb = std::round(b(i) * 1e9);
        if (ra != rb) return ra < rb;
    }
    return false;
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

VertexSet enumerate_vertices(const LinearProgram& lp, const VertexEnumLimits& limits) {
    const int n = lp.num_vars();
    const int m = lp.num_constraints();
    const int rows = m + n;
    if (n > limits.max_dim) throw CombinatorialBlowup("vertex enumeration: dimension above cap");
    if (binomial(rows, n) > limits.max_subsets)
        throw CombinatorialBlowup("vertex enumeration: too many candidate bases");

    Matrix full(rows, n);
    Vector rhs(rows);
    full.topRows(m) = lp.A;
    rhs.head(m) = lp.b;
    full.bottomRows(n) = -Matrix::Identity(n, n);
    rhs.tail(n).setZero();

    VertexSet out;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Matrix sub(n, n);
    Vector sub_rhs(n);
    do {
        for (int r = 0; r < n; ++r) {
            sub.row(r) = full.row(idx[r]);
            sub_rhs(r) = rhs(idx[r]);
        }
        Eigen::FullPivLU<Matrix> lu(sub);
        lu.setThreshold(1e-10);
        if (!lu.isInvertible()) continue;
        const Vector x = lu.solve(sub_rhs);
        if (!x.allFinite()) continue;
        const Vector slack = full * x - rhs;
        if (slack.maxCoeff() > kFeasTol) continue;
        if ((slack.array().abs() <= kFeasTol).count() < n) continue;

        const bool duplicate = std::any_of(out.points.begin(), out.points.end(), [&](const Vector& p) {
            return (p - x).lpNorm<Eigen::Infinity>() <= kDupTol;
        });
        if (duplicate) continue;
        out.points.push_back(x);
        out.basis_records.push_back(idx);
    } while (advance(idx, rows));

    std::vector<std::size_t> order(out.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lex_less(out.points[a], out.points[b]); });
    VertexSet sorted;
    for (std::size_t k : order) {
        sorted.points.push_back(out.points[k]);
        sorted.basis_records.push_back(out.basis_records[k]);
    }
    return sorted;
}

VertexSet enumerate_vertices(const LPInstance& inst, const VertexEnumLimits& limits) {
    return enumerate_vertices(inst.program(), limits);
}

}  // namespace aialo
