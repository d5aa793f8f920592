#include "aialo/run_report.hpp"

#include <json.hpp>

namespace aialo {

std::string report_to_json(const RunReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["status"] = r.ok() ? "ok" : "failure";
    if (!r.ok()) j["failure"] = r.failure;
    j["total_samples"] = r.total_samples;
    j["per_param_samples"] = r.per_param_samples;
    j["iterations"] = r.iterations;
    if (!r.round_samples.empty()) j["round_samples"] = r.round_samples;
    j["output"] = std::vector<double>(r.output.data(), r.output.data() + r.output.size());
    j["is_oracle"] = r.is_oracle;
    j["correct"] = r.correct;
    j["binding_mean"] = r.binding_mean;
    j["nonbinding_mean"] = r.nonbinding_mean;
    if (with_timing) j["wall_time_s"] = r.wall_time_s;
    return j.dump();
}

}  // namespace aialo
