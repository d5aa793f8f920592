#pragma once

#include "aialo/lp_model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aialo {

enum class RunStatus { Ok, Failure };

// Outcome of one algorithm run on one instance. `correct`, `binding_mean`
// and `nonbinding_mean` are filled in by the harness from the true
// instance; algorithms never set them.
struct RunReport {
    std::string algorithm;
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::Ok;
    std::string failure;

    std::int64_t total_samples = 0;
    std::vector<std::int64_t> per_param_samples;
    std::int64_t iterations = 0;
    std::vector<std::int64_t> round_samples;  // successive elimination only

    Vector output;
    bool is_oracle = false;

    bool correct = false;
    double binding_mean = 0.0;
    double nonbinding_mean = 0.0;

    double wall_time_s = 0.0;  // excluded from serialized reports

    bool ok() const { return status == RunStatus::Ok; }
};

// Deterministic JSON rendering (no wall time unless asked for).
std::string report_to_json(const RunReport& r, bool with_timing = false);

}  // namespace aialo
