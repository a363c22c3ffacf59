#pragma once

#include "eigenpert/config.hpp"
#include "eigenpert/oracles.hpp"
#include "eigenpert/series.hpp"

#include <string>
#include <vector>

namespace eigenpert {

inline constexpr const char* kVersion = "0.1.0";

// SeriesExpansion -> JSON: coefficients as nested row-major arrays, bounds as
// a flat name -> {value, applicable} map.
std::string series_expansion_json(const SeriesExpansion& se);

// CheckResult -> JSON object {check, applicable, lhs, rhs, slack, pass}.
std::string check_result_json(const CheckResult& r);
std::string check_results_json(const std::vector<CheckResult>& rs);

// Run manifest: command, resolved config, seed, version, timestamps, output
// paths. Timestamps are wall-clock ISO-8601; everything else is a pure
// function of the config.
struct RunManifest {
    std::string command;
    Config config;
    std::uint64_t seed = 0;
    std::string started_at;
    std::string finished_at;
    double wall_seconds = 0.0;
    std::vector<std::string> outputs;
};

std::string manifest_json(const RunManifest& m);

std::string iso8601_now();

} // namespace eigenpert
