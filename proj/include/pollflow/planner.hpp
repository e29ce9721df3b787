#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pollflow/demand.hpp"
#include "pollflow/optimizer.hpp"
#include "pollflow/scenario.hpp"

namespace pollflow {

enum class PlanMode { Fixed, Dynamic };

const char* plan_mode_name(PlanMode mode);

// Rolling state of one horizon run. `day` is the last provisioned day:
// 0 before the first night's transfers have been applied.
struct SystemState {
    int day = 0;
    std::map<std::string, ResourceCounts> inventory;
    ResourceCounts warehouse_stock{0, 0, 0};
    ObservedArrivals observed;
    double accumulated_cost = 0.0;
};

SystemState initial_state(const ScenarioData& scenario, PlanMode mode);

// One end-of-day pipeline pass: forecast from observations so far, evaluate
// every remaining active location-day, score, and run the two-stage solve
// from the current inventories. Returns the remaining-horizon plan.
AllocationPlan nightly_replan(const SystemState& state, const ScenarioData& scenario);

// Executes the given night's orders and accrues transfer plus next-day
// deployment costs. Throws ValidationError on stock underflow.
SystemState apply_night_transfers(SystemState state, const AllocationPlan& plan, int night,
                                  const CostParameters& params);

// Population-proportional split of the fleet by largest-remainder rounding,
// minimum 1 per polling location, clamped to layout caps.
std::map<std::string, ResourceCombination>
fixed_allocation(const std::vector<SiteRecord>& sites, const ResourceCounts& fleet);

// The fixed plan as an AllocationPlan over the instance's active pairs:
// identical counts every day, no transfers.
AllocationPlan generate_fixed_baseline(const OptimizationInstance& inst,
                                       const ResourceCounts& fleet);

// One ledger line per (day, location) that was open that day.
struct LedgerRecord {
    int day = 0;
    std::string location;
    ResourceCombination combo;
    long arrivals = 0;
    double robust_wait_min = 0.0;
    std::array<double, kResourceCount> utilization{}; // scheduled-hours basis
    long transfers_in = 0;
    long transfers_out = 0;
    double cost_accrued = 0.0; // cumulative for this location
};

struct HorizonResult {
    PlanMode mode = PlanMode::Dynamic;
    std::vector<LedgerRecord> records;
    AllocationPlan executed; // realized assignments and applied transfers
    std::map<LocationDay, std::vector<long>> realized_counts;
    double total_cost = 0.0;
};

// Replays the whole horizon: realizes arrivals from scenario truth, simulates
// each open location-day under the active allocation, and (in dynamic mode)
// replans every night. Deterministic for a fixed seed.
HorizonResult run_horizon(const ScenarioData& scenario, PlanMode mode, std::uint64_t seed);

} // namespace pollflow
