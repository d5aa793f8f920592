#include "aialo/instance_io.hpp"

#include "aialo/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace aialo {

using nlohmann::json;

std::string instance_to_json(const LPInstance& inst) {
    const int n = inst.num_vars();
    const int m = inst.num_constraints();
    json j;
    j["n"] = n;
    j["m"] = m;
    j["c"] = std::vector<double>(inst.objective().data(), inst.objective().data() + n);
    json rows = json::array();
    for (int i = 0; i < m; ++i) {
        std::vector<double> row(n);
        for (int k = 0; k < n; ++k) row[k] = inst.constraint_matrix()(i, k);
        rows.push_back(row);
    }
    j["A"] = rows;
    j["b"] = std::vector<double>(inst.rhs().data(), inst.rhs().data() + m);
    j["R"] = inst.radius_bound();
    j["unknown"] = inst.unknown() == UnknownSet::B ? "b" : "c";
    const Vector& sigma = inst.noise_scale();
    if ((sigma.array() == sigma(0)).all())
        j["sigma"] = sigma(0);
    else
        j["sigma"] = std::vector<double>(sigma.data(), sigma.data() + sigma.size());
    if (inst.unknown() == UnknownSet::B) {
        std::vector<int> known;
        for (int i = 0; i < m; ++i)
            if (inst.row_known(i)) known.push_back(i);
        if (!known.empty()) j["known_rows"] = known;
    }
    return j.dump();
}

LPInstance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance JSON: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const int m = j.at("m").get<int>();
        if (n < 1 || m < 1) throw_validation("instance JSON: n and m must be positive");
        const auto c = j.at("c").get<std::vector<double>>();
        const auto rows = j.at("A").get<std::vector<std::vector<double>>>();
        const auto b = j.at("b").get<std::vector<double>>();
        if (static_cast<int>(c.size()) != n || static_cast<int>(b.size()) != m ||
            static_cast<int>(rows.size()) != m)
            throw_validation("instance JSON: dimensions disagree with n and m");

        LinearProgram lp;
        lp.c = Eigen::Map<const Vector>(c.data(), n);
        lp.b = Eigen::Map<const Vector>(b.data(), m);
        lp.A.resize(m, n);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw_validation("instance JSON: row " + std::to_string(i) + " has wrong length");
            for (int k = 0; k < n; ++k) lp.A(i, k) = rows[i][k];
        }

        const std::string unknown = j.at("unknown").get<std::string>();
        if (unknown != "b" && unknown != "c")
            throw_validation("instance JSON: \"unknown\" must be \"b\" or \"c\"");
        const UnknownSet set = unknown == "b" ? UnknownSet::B : UnknownSet::C;

        Vector sigma;
        const json& js = j.at("sigma");
        if (js.is_number()) {
            sigma = Vector::Constant(1, js.get<double>());
        } else {
            const auto s = js.get<std::vector<double>>();
            sigma = Eigen::Map<const Vector>(s.data(), static_cast<Eigen::Index>(s.size()));
        }

        std::vector<bool> known;
        if (j.contains("known_rows")) {
            known.assign(m, false);
            for (int idx : j.at("known_rows").get<std::vector<int>>()) {
                if (idx < 0 || idx >= m) throw_validation("instance JSON: known row index out of range");
                known[idx] = true;
            }
        }
        return LPInstance(std::move(lp), j.at("R").get<double>(), set, std::move(sigma),
                          std::move(known));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance JSON: ") + e.what());
    }
}

LPInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

void save_instance(const LPInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file " + path);
    out << instance_to_json(inst) << '\n';
}

}  // namespace aialo
