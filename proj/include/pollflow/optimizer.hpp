#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pollflow/cost.hpp"
#include "pollflow/queueing.hpp"
#include "pollflow/types.hpp"

namespace pollflow {

struct FairnessBounds {
    double lower = 0.0;
    double upper = 1.0;

    void validate() const;
};

// Ordering is (day, location): the solver assigns day by day so each night's
// transfer subproblem closes as soon as its two adjacent days are fixed.
struct LocationDay {
    int day = 0;
    std::string location;

    auto operator<=>(const LocationDay&) const = default;
};

struct Candidate {
    ResourceCombination combo;
    double robust_wait_min = 0.0;
    double score = 0.0;
};

using CandidateSet = std::map<LocationDay, std::vector<Candidate>>;

struct TransferOrder {
    int night = 0; // the night before day `night`
    std::string from;
    std::string to;
    Resource resource = Resource::PollPads;
    long qty = 0;
    double cost = 0.0;
};

struct AllocationPlan {
    std::map<LocationDay, Candidate> assignments;
    std::vector<TransferOrder> transfers;
    double total_cost = 0.0;
    double total_score = 0.0;
    bool exact = true;
};

// Everything the two-stage solve needs. Candidate lists cover exactly the
// active (location, day) pairs of the remaining horizon; `initial_inventory`
// is the state before the first night.
struct OptimizationInstance {
    std::vector<SiteRecord> sites;
    std::vector<int> days; // ascending, contiguous
    CandidateSet candidates;
    std::map<std::string, ResourceCounts> initial_inventory;
    ResourceCounts warehouse_stock{0, 0, 0};
    CostMatrix cost_matrix;
    CostParameters cost_params;
    FairnessBounds fairness;
    double epsilon = 0.05;

    // Exact search is used when the assignment space and every per-night
    // transfer subproblem stay within these limits; otherwise the greedy
    // construction runs and the plan is marked `exact = false`.
    long exact_assignment_limit = 250000;
    long exact_transport_units = 48;
    int exact_transport_nodes = 8;

    // When set, each district draws only on its own share of warehouse stock
    // and the instance decomposes by district.
    std::optional<std::map<int, ResourceCounts>> warehouse_partition;

    const SiteRecord& warehouse() const;
    const SiteRecord& site(const std::string& id) const;
};

// Deterministic recomputation of a plan's money cost: all transfer orders
// plus per-machine-day deployment charges. Throws on a cross-district order.
double total_cost(const AllocationPlan& plan, const OptimizationInstance& inst);

struct StageOneResult {
    AllocationPlan plan;
    double optimal_cost = 0.0;
};

// Minimum total cost over candidate choices within the fairness bounds and
// transfer-feasible inventories. Exact (matched against exhaustive search) on
// desk-scale instances.
StageOneResult solve_stage_one(const OptimizationInstance& inst);

// Maximum total score subject to cost <= (1 + epsilon) * stage_one_cost.
AllocationPlan solve_stage_two(const OptimizationInstance& inst, double stage_one_cost);

// Convenience: stage one then stage two.
AllocationPlan solve_lexicographic(const OptimizationInstance& inst);

// Largest feasible lower score bound on the grid of occurring scores; the
// upper bound is left unchanged.
FairnessBounds tighten_fairness(const OptimizationInstance& inst);

// All invariant violations of a plan against an instance; empty means valid.
std::vector<std::string> validate_plan(const AllocationPlan& plan,
                                       const OptimizationInstance& inst);

// Solves each district against its warehouse share and merges the results.
// Requires `warehouse_partition` to be set.
AllocationPlan solve_partitioned(const OptimizationInstance& inst);

} // namespace pollflow
