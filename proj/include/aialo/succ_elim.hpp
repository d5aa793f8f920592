#pragma once

#include "aialo/lp_model.hpp"
#include "aialo/run_report.hpp"
#include "aialo/vertex_enum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aialo {

struct EliminationConfig {
    double lambda = 10.0;
    int max_rounds = 60;
    // When set, stop as soon as the round accuracy 2^-r drops below eps_opt / 2
    // and return the current leader (no uniqueness requirement).
    std::optional<double> eps_opt;
    VertexEnumLimits limits;
};

struct EliminationRound {
    int round = 0;
    double eps = 0.0;
    double delta = 0.0;
    std::vector<int> survivors;  // indices into the initial vertex set, before elimination
    Vector tau;
    std::vector<std::int64_t> samples;  // fresh draws per coordinate this round
    Vector c_hat;
    int leader = -1;
};

struct EliminationTrace {
    VertexSet vertices;
    std::vector<EliminationRound> rounds;
    std::vector<int> final_survivors;
};

// Successive elimination over the extreme points for the unknown-c case.
// Every round samples afresh; the round mean never mixes earlier draws.
RunReport run_successive_elimination(const LPInstance& inst, double delta, std::uint64_t seed,
                                     const EliminationConfig& cfg = {}, EliminationTrace* trace = nullptr);

// Best minus second-best extreme-point objective value.
double objective_gap(const Vector& c, const VertexSet& vertices);
inline double objective_gap(const LPInstance& inst, const VertexSet& vertices) {
    return objective_gap(inst.objective(), vertices);
}

}  // namespace aialo
