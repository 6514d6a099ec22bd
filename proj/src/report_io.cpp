#include "report_io.hpp"

#include <json.hpp>

#include "version.hpp"

namespace ffgroup {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json report_to_json_value(const Report& rep) {
    ordered_json j;
    j["harness"] = rep.harness;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = std::move(params);
    j["cases_total"] = rep.cases_total;
    j["cases_checked"] = rep.cases_checked;
    ordered_json failures = ordered_json::array();
    for (const auto& f : rep.failures) {
        ordered_json rec;
        rec["f"] = f.f;
        rec["g"] = f.g;
        rec["witness"] = f.witness;
        rec["observed"] = f.observed;
        rec["expected"] = f.expected;
        failures.push_back(std::move(rec));
    }
    j["failures"] = std::move(failures);
    j["elapsed_ms"] = rep.elapsed_ms;
    j["budget_hit"] = rep.budget_hit;
    j["tool_version"] = kToolVersion;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_json(const Report& rep, int indent) {
    return report_to_json_value(rep).dump(indent);
}

std::string report_csv_header() {
    return "harness,params,cases_total,cases_checked,failure_count,budget_hit,elapsed_ms,"
           "tool_version";
}

std::string report_csv_row(const Report& rep) {
    std::string params;
    for (const auto& [k, v] : rep.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + v;
    }
    std::string out;
    out += csv_escape(rep.harness) + ',';
    out += csv_escape(params) + ',';
    out += std::to_string(rep.cases_total) + ',';
    out += std::to_string(rep.cases_checked) + ',';
    out += std::to_string(rep.failures.size()) + ',';
    out += rep.budget_hit ? "true," : "false,";
    out += std::to_string(rep.elapsed_ms) + ',';
    out += csv_escape(kToolVersion);
    return out;
}

std::string report_text(const Report& rep) {
    std::string out;
    out += "harness: " + rep.harness + "\n";
    out += "params:";
    for (const auto& [k, v] : rep.params) out += " " + k + "=" + v;
    out += "\n";
    out += "cases: " + std::to_string(rep.cases_checked) + "/" + std::to_string(rep.cases_total) +
           "\n";
    out += "failures: " + std::to_string(rep.failures.size()) + "\n";
    for (const auto& f : rep.failures) {
        out += "  failure f=" + f.f + " g=" + f.g + " witness=" + f.witness +
               " observed=" + f.observed + " expected=" + f.expected + "\n";
    }
    out += "budget_hit: " + std::string(rep.budget_hit ? "true" : "false") + "\n";
    out += "elapsed_ms: " + std::to_string(rep.elapsed_ms) + "\n";
    out += rep.passed() ? "PASS\n" : "FAIL\n";
    return out;
}

}  // namespace ffgroup
