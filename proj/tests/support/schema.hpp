#pragma once

#include <string>

#include <json.hpp>

namespace testing_support {

/// Empty string when j matches the per-instance report schema, otherwise a
/// description of the first mismatch.
inline std::string schema_violation(const nlohmann::json &j) {
    using nlohmann::json;
    auto is_rational = [](const json &v) {
        if (!v.is_string()) return false;
        const std::string s = v.get<std::string>();
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0, slash = 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] == '/' && slash == 0 && i > 0) slash = i;
            else if (s[i] < '0' || s[i] > '9') return false;
        }
        return slash == 0 || slash + 1 < s.size();
    };
    auto string_list = [&](const json &v) {
        if (!v.is_array()) return false;
        for (const auto &e : v)
            if (!is_rational(e)) return false;
        return true;
    };
    if (!j.is_object()) return "not an object";
    for (const char *k : {"name", "status"})
        if (!j.contains(k) || !j[k].is_string()) return std::string(k) + " must be a string";
    for (const char *k : {"dimension", "num_terms", "max_degree"})
        if (!j.contains(k) || !j[k].is_number_integer()) return std::string(k) + " must be an integer";
    const auto st = j["status"].get<std::string>();
    if (st != "zero" && st != "all_ones" && st != "definite" && st != "positive_value" && st != "failed" &&
        st != "error")
        return "unknown status " + st;
    if (!j.contains("witness")) return "missing witness";
    if (!j["witness"].is_null()) {
        const auto &w = j["witness"];
        if (!w.is_object() || !w.contains("n") || !w["n"].is_array()) return "witness.n";
        for (const auto &e : w["n"])
            if (!e.is_number_integer()) return "witness.n entries";
        if (!w.contains("t") || !(w["t"].is_null() || is_rational(w["t"]))) return "witness.t";
        if (!w.contains("mu") || !(w["mu"].is_null() || w["mu"].is_number_integer())) return "witness.mu";
        if (!w.contains("point") || !(w["point"].is_null() || string_list(w["point"]))) return "witness.point";
    }
    if (!j.contains("zero")) return "missing zero";
    if (!j["zero"].is_null()) {
        if (!j["zero"].is_array()) return "zero must be an array";
        for (const auto &z : j["zero"]) {
            if (!z.contains("defining") || !string_list(z["defining"])) return "zero.defining";
            if (!z.contains("interval") ||
                !(z["interval"].is_null() || (string_list(z["interval"]) && z["interval"].size() == 2)))
                return "zero.interval";
            if (!z.contains("exact") || !(z["exact"].is_null() || is_rational(z["exact"]))) return "zero.exact";
            if (z["exact"].is_null() == z["interval"].is_null()) return "exactly one of exact/interval";
            if (!z.contains("approx") || !z["approx"].is_string()) return "zero.approx";
        }
    }
    if (!j.contains("gbar") || !(j["gbar"].is_null() || string_list(j["gbar"]))) return "gbar";
    if (!j.contains("stats") || !j["stats"].is_object()) return "stats";
    for (const char *k : {"lp_solves", "candidates_tried", "doubling_steps", "time_ms"})
        if (!j["stats"].contains(k) || !j["stats"][k].is_number_integer()) return std::string("stats.") + k;
    return {};
}

} // namespace testing_support
