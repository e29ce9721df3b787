#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pollflow/cost.hpp"
#include "pollflow/demand.hpp"
#include "pollflow/optimizer.hpp"
#include "pollflow/queueing.hpp"
#include "pollflow/scoring.hpp"
#include "pollflow/types.hpp"

namespace pollflow {

// Everything a scenario study needs, as parsed from the config JSON.
struct ScenarioConfig {
    std::filesystem::path sites_path;
    std::filesystem::path historical_path;
    std::vector<double> profile;
    int horizon_days = 2; // D: D-1 early days + election day
    double turnout_rate = 0.65;
    double early_share = 0.6;
    long absentee = 0;
    std::vector<std::string> early_locations; // empty = every polling location
    std::vector<double> day_weights;          // empty = uniform over early days
    ServiceTimeConfig service;
    UtilizationBand band;
    IndifferenceZoneSpec zones = IndifferenceZoneSpec::defaults();
    std::optional<FairnessBounds> fairness; // unset = auto-tighten
    double epsilon = 0.05;
    ResourceCounts fleet{0, 0, 0};
    std::uint64_t seed = 1;
    ReplicationPolicy replications;
    double robust_quantile = 0.997;
    CostParameters cost_params;
    std::map<std::string, double> demand_scale; // truth multiplier per location
    bool deterministic_arrivals = false;        // realized counts = rounded expectation
};

// Command-line overrides applied after the config file is read.
struct ScenarioOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> replications;
    std::optional<double> robust_quantile;
    std::optional<std::string> util_band; // "lo:hi" or "lo:hi,lo:hi,lo:hi"
    std::optional<double> early_share;
    std::optional<double> epsilon;
};

struct ScenarioData {
    ScenarioConfig config;
    std::vector<SiteRecord> sites; // exactly one warehouse
    HistoricalTurnout historical;
    HourlyProfile profile;
    CostMatrix cost_matrix;
    std::set<std::string> early_eligible;
    std::map<std::string, std::vector<double>> true_daily_totals; // per location, D entries

    int horizon_days() const { return config.horizon_days; }
    bool open_on(const std::string& location, int day) const;
    std::vector<std::string> polling_location_ids() const;
    const SiteRecord& warehouse() const;
};

// Parses and cross-validates all inputs; throws ValidationError / IoError
// with file and line context.
ScenarioData load_inputs(const std::filesystem::path& config_path,
                         const ScenarioOverrides& overrides = {});

// Same, from an already-parsed config (used by tests and generators).
ScenarioData finalize_scenario(ScenarioConfig config);

// Splits the in-person voter pool into per-location per-day expected totals:
// early pool over early-eligible locations and early days, election-day pool
// over all locations, both proportional to registered voters.
std::map<std::string, std::vector<double>>
build_scenario_demand(const ScenarioConfig& config, const std::vector<SiteRecord>& sites,
                      const std::set<std::string>& early_eligible);

UtilizationBand parse_util_band(const std::string& text);

} // namespace pollflow
