#include "eigenpert/serialize.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>

namespace eigenpert {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json check_to_json(const CheckResult& r) {
    ordered_json j;
    j["check"] = r.check;
    j["applicable"] = r.applicable;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["pass"] = r.pass;
    return j;
}

} // namespace

std::string series_expansion_json(const SeriesExpansion& se) {
    ordered_json j;
    j["j"] = se.j;
    j["order"] = se.order;
    j["delta"] = se.delta_report.delta;
    j["delta_prime"] = se.delta_report.delta_prime;
    j["gap"] = se.delta_report.gap;
    j["norm_rr"] = se.delta_report.norm_rr;
    j["norm_rp"] = se.delta_report.norm_rp;
    j["norm_pp"] = se.delta_report.norm_pp;
    ordered_json coeffs = ordered_json::array();
    for (const Matrix& c : se.proj_coeffs) coeffs.push_back(matrix_to_json(c));
    j["proj_coeffs"] = std::move(coeffs);
    j["eval_coeffs"] = se.eval_coeffs;
    j["proj_partial_sum"] = matrix_to_json(se.proj_partial_sum);
    j["eval_partial_sum"] = se.eval_partial_sum;
    ordered_json bounds;
    for (const auto& [name, bv] : se.bounds) {
        ordered_json b;
        b["value"] = bv.value;
        b["applicable"] = bv.applicable;
        if (!bv.reason.empty()) b["reason"] = bv.reason;
        bounds[name] = std::move(b);
    }
    j["bounds"] = std::move(bounds);
    return j.dump(2) + "\n";
}

std::string check_result_json(const CheckResult& r) { return check_to_json(r).dump(2) + "\n"; }

std::string check_results_json(const std::vector<CheckResult>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(check_to_json(r));
    return arr.dump(2) + "\n";
}

std::string manifest_json(const RunManifest& m) {
    ordered_json j;
    j["command"] = m.command;
    j["version"] = kVersion;
    j["seed"] = m.seed;
    ordered_json cfg;
    for (const auto& [k, v] : m.config.entries()) cfg[k] = v;
    j["config"] = std::move(cfg);
    j["outputs"] = m.outputs;
    j["started_at"] = m.started_at;
    j["finished_at"] = m.finished_at;
    j["wall_seconds"] = m.wall_seconds;
    return j.dump(2) + "\n";
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

} // namespace eigenpert
