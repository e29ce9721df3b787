#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pollflow/planner.hpp"
#include "pollflow/scenario.hpp"

namespace pollflow {

enum class Period { Early, ElectionDay };

const char* period_name(Period p);

// Aggregated fixed-vs-dynamic comparison over a completed horizon pair.
struct ComparisonReport {
    std::vector<std::string> band_labels;

    // Indexed [mode][period]; mode 0 = dynamic, 1 = fixed.
    std::array<std::array<std::vector<double>, 2>, 2> histogram;                 // per band
    std::array<std::array<std::array<double, kResourceCount>, 2>, 2> mean_util{}; // per resource
    std::array<std::array<long, kResourceCount>, 2> machine_days{};               // [mode][resource]

    struct HotspotRow {
        std::string location;
        ResourceCombination fixed_combo;
        std::string fixed_band;
        ResourceCombination dynamic_combo;
        std::string dynamic_band;
    };
    std::vector<HotspotRow> hotspots; // election-day rows: more machines, lower band

    static int mode_index(PlanMode mode) { return mode == PlanMode::Dynamic ? 0 : 1; }
};

struct CompareOutput {
    ComparisonReport report;
    HorizonResult dynamic_run;
    HorizonResult fixed_run;
};

// Runs both modes with common demand-realization seeds and aggregates.
CompareOutput run_compare(const ScenarioData& scenario);

ComparisonReport build_report(const ScenarioData& scenario, const HorizonResult& dynamic_run,
                              const HorizonResult& fixed_run);

// Writes histogram.csv, utilization.csv, resources.csv, hotspots.csv,
// plan.json, ledger.ndjson (dynamic) and ledger_fixed.ndjson. Byte-stable.
void emit_reports(const CompareOutput& output, const ScenarioData& scenario,
                  const std::filesystem::path& outdir);

// Reloads the four CSVs; used to check emitted files round-trip exactly.
ComparisonReport load_report_csvs(const std::filesystem::path& outdir);

// Plan serialization shared by emit_reports and the `plan`/`validate` verbs.
std::string plan_to_json(const AllocationPlan& plan);
AllocationPlan plan_from_json_file(const std::filesystem::path& path);

} // namespace pollflow
