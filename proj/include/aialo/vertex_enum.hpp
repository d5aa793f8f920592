#pragma once

#include "aialo/lp_model.hpp"

#include <cstdint>
#include <vector>

namespace aialo {

struct VertexSet {
    std::vector<Vector> points;
    // Combined row indices (A rows, then sign rows) of the basis that produced
    // each point.
    std::vector<std::vector<int>> basis_records;

    std::size_t size() const { return points.size(); }
};

struct VertexEnumLimits {
    int max_dim = 12;
    double max_subsets = 1e7;
};

// All extreme points of { A x <= b, x >= 0 } by solving every n-subset of
// the m + n rows, keeping feasible solutions and merging duplicates
// (inf-norm 1e-6). Output is sorted lexicographically by coordinates rounded
// to 1e-9. Throws CombinatorialBlowup beyond the limits.
VertexSet enumerate_vertices(const LinearProgram& lp, const VertexEnumLimits& limits = {});
VertexSet enumerate_vertices(const LPInstance& inst, const VertexEnumLimits& limits = {});

double binomial(int n, int k);

}  // namespace aialo
