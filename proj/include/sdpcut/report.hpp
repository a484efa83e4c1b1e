#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

namespace sdpcut {

/// One algorithm run on one graph.
struct RunReport {
    std::string graph;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t degeneracy = 0;
    std::int64_t triangles = 0;
    std::string algo;
    std::string params;
    std::uint64_t seed = 0;
    std::int64_t value = 0;
    std::int64_t surplus_num = 0; // 2*value - m; the surplus is surplus_num / 2
    double certificate = 0.0;
    double bound = 0.0;
    double ms = 0.0;

    double surplus() const { return static_cast<double>(surplus_num) / 2.0; }

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline constexpr const char* kCsvHeader = "graph,n,m,degeneracy,triangles,algo,params,seed,value,surplus_num,certificate,bound,ms";

inline void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"graph", r.graph},
                       {"n", r.n},
                       {"m", r.m},
                       {"degeneracy", r.degeneracy},
                       {"triangles", r.triangles},
                       {"algo", r.algo},
                       {"params", r.params},
                       {"seed", r.seed},
                       {"value", r.value},
                       {"surplus_num", r.surplus_num},
                       {"surplus", r.surplus()},
                       {"certificate", r.certificate},
                       {"bound", r.bound},
                       {"ms", r.ms}};
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("graph").get_to(r.graph);
    j.at("n").get_to(r.n);
    j.at("m").get_to(r.m);
    j.at("degeneracy").get_to(r.degeneracy);
    j.at("triangles").get_to(r.triangles);
    j.at("algo").get_to(r.algo);
    j.at("params").get_to(r.params);
    j.at("seed").get_to(r.seed);
    j.at("value").get_to(r.value);
    j.at("surplus_num").get_to(r.surplus_num);
    j.at("certificate").get_to(r.certificate);
    j.at("bound").get_to(r.bound);
    j.at("ms").get_to(r.ms);
}

/// Shortest representation of a double that reads back exactly.
inline std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv_row(const RunReport& r) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    return csv_field(r.graph) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::to_string(r.degeneracy) + "," + std::to_string(r.triangles) + "," + csv_field(r.algo) + "," +
           csv_field(r.params) + "," + std::to_string(r.seed) + "," + std::to_string(r.value) + "," +
           std::to_string(r.surplus_num) + "," + format_real(r.certificate) + "," + format_real(r.bound) + "," + ms;
}

} // namespace sdpcut
