#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "partlab/identity.hpp"
#include "partlab/matrix.hpp"
#include "partlab/partition.hpp"
#include "partlab/path.hpp"
#include "partlab/squared.hpp"

// JSON and CSV shapes for every pipeline object. Field names and CSV columns
// are part of the tool's contract and do not change.

namespace partlab::io {

using json = nlohmann::json;

inline json partition_to_json(const Partition& p) {
    return json{{"parts", p.parts}, {"weight", p.weight()}};
}

inline json matrix_to_json(const TwoLineMatrix& M) {
    return json{{"top", M.top}, {"bottom", M.bottom}};
}

inline TwoLineMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
        throw std::invalid_argument(
            R"(matrix JSON must be an object {"top": [..], "bottom": [..]})");
    TwoLineMatrix M;
    try {
        M.top = j.at("top").get<std::vector<Int>>();
        M.bottom = j.at("bottom").get<std::vector<Int>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("matrix JSON rows must be integer arrays: ") + e.what());
    }
    return M;
}

inline json path_to_json(const LatticePath& path) {
    json points = json::array();
    for (const Point& p : path.points) points.push_back(json::array({p.x, p.y}));
    return json{{"points", points}};
}

inline json hooks_to_json(const OddPartition& odd) {
    return json{{"parts", odd.parts}, {"m", odd.weight()}};
}

inline json tsquared_to_json(const SquaredPartition& sp) {
    return json{{"components", sp.components}, {"b", sp.b()}, {"a", sp.a()}, {"m", sp.m()}};
}

inline json solutions_to_json(const SystemSolutionSet& set) {
    return json{{"a", set.a}, {"b", set.b}, {"solutions", set.solutions}};
}

inline json report_to_json(const VerificationReport& r, bool include_per_m = false) {
    json j{{"n", r.n}, {"p_oracle", r.lhs}, {"p_theorem", r.rhs}, {"match", r.match}};
    if (include_per_m) {
        json per = json::object();
        for (const auto& [m, count] : r.per_m) per[std::to_string(m)] = count;
        j["per_m"] = per;
    }
    return j;
}

struct FrequencyRow {
    Int m = 0;
    Int frequency = 0;
};

inline std::string frequency_table_csv(const std::vector<FrequencyRow>& rows) {
    std::ostringstream os;
    os << "m,frequency,residue_mod_4\n";
    for (const auto& row : rows)
        os << row.m << ',' << row.frequency << ',' << row.m % 4 << '\n';
    return os.str();
}

inline std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "n,p_oracle,p_theorem,match\n";
    for (const auto& r : reports)
        os << r.n << ',' << r.lhs << ',' << r.rhs << ','
           << (r.match ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace partlab::io
