#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pollflow/types.hpp"

namespace pollflow {

inline constexpr double kMinutesPerHour = 60.0;

enum class ServiceFamily { Deterministic, Exponential, Lognormal };

struct ServiceDistribution {
    ServiceFamily family = ServiceFamily::Deterministic;
    double mean_min = 1.0;
    double cv = 0.0; // coefficient of variation; ignored for exponential
};

// Per-stage service processes: check-in, ballot marking, scanning.
// A deterministic stage with mean 0 acts as a pass-through, which is how a
// stage is removed when reducing the network to a single queue.
struct ServiceTimeConfig {
    std::array<ServiceDistribution, kResourceCount> stages{
        ServiceDistribution{ServiceFamily::Lognormal, 1.0, 0.5},
        ServiceDistribution{ServiceFamily::Lognormal, 5.0, 0.4},
        ServiceDistribution{ServiceFamily::Deterministic, 0.5, 0.0},
    };

    void validate() const;
};

// One day's demand for the simulator: either expected hourly rates (arrival
// counts drawn Poisson per hour) or verbatim hourly counts. Either way,
// arrivals are placed uniformly within their hour.
struct ArrivalSpec {
    std::vector<double> hourly_rates;
    std::vector<long> hourly_counts;
    bool verbatim_counts = false;

    static ArrivalSpec from_rates(std::vector<double> rates);
    static ArrivalSpec from_counts(std::vector<long> counts);
    int hours() const;
};

// Pooled outcome of replicated day simulations for one combination.
struct DaySimulationResult {
    std::vector<double> waits; // per-voter total in-queue wait, minutes
    std::array<double, kResourceCount> utilization{};           // busy / (servers x horizon until clear)
    std::array<double, kResourceCount> utilization_scheduled{}; // busy / (servers x scheduled day)
    int replications = 0;
    long total_voters = 0;

    double mean_wait() const;
};

struct EvaluatedCombination {
    ResourceCombination combo;
    double robust_wait_min = 0.0;
    std::array<double, kResourceCount> utilization{};
    std::array<double, kResourceCount> utilization_scheduled{};
    bool passed_filter = false;
};

// Per-stage admissible utilization range; combinations outside any stage's
// band are dropped from the optimizer's candidate set.
struct UtilizationBand {
    std::array<double, kResourceCount> lo{0.0, 0.0, 0.0};
    std::array<double, kResourceCount> hi{0.95, 0.95, 0.95};

    void validate() const;
    bool contains(const std::array<double, kResourceCount>& u) const;
};

// Fixed replication count by default; the adaptive rule keeps replicating
// until the 95% CI half-width of the mean wait drops below the target or the
// cap is reached.
struct ReplicationPolicy {
    int count = 100;
    bool adaptive = false;
    double ci_half_width_min = 0.5;
    int min_replications = 10;
    int max_replications = 1000;

    void validate() const;
};

// --- Core single-pass simulation -------------------------------------------

// Per-replication trace of one day for one combination.
struct TandemDayOutcome {
    std::vector<double> total_waits;                       // per voter
    std::array<std::vector<double>, kResourceCount> stage_waits;
    std::array<double, kResourceCount> stage_busy_min{};
    double clear_time_min = 0.0; // when the last voter leaves the network
};

// Voters in `arrival_times` (sorted, minutes) flow FIFO through the three
// stages; `service_min` holds 3 entries per voter (stage-major per voter).
TandemDayOutcome simulate_tandem_day(std::span<const double> arrival_times,
                                     const ResourceCombination& combo,
                                     std::span<const double> service_min);

// Arrival/service stream generation shared by all combinations of one
// replication, so comparisons across combinations use common random numbers.
std::vector<double> draw_arrival_times(const ArrivalSpec& spec, std::uint64_t seed);
std::vector<double> draw_service_times(std::size_t voters, const ServiceTimeConfig& svc,
                                       std::uint64_t seed);

// --- Replicated simulation ---------------------------------------------------

DaySimulationResult simulate_voting_day(const ArrivalSpec& spec,
                                        const ResourceCombination& combo,
                                        const ServiceTimeConfig& svc,
                                        const ReplicationPolicy& policy,
                                        std::uint64_t seed);

// Empirical quantile by the ceiling-index rule: sort ascending and take the
// element at 1-based index ceil(q*n). Empty input yields 0.
double robust_wait(std::span<const double> samples, double quantile = 0.997);

// Full grid {1..cap} per resource, poll-pad-major lexicographic order.
std::vector<ResourceCombination>
enumerate_feasible_combinations(const std::array<int, kResourceCount>& layout_caps);

// Simulates every feasible combination for one location-day under common
// random numbers and applies the utilization filter. Output order follows
// enumerate_feasible_combinations.
std::vector<EvaluatedCombination> evaluate_location_day(
    const ArrivalSpec& spec, const std::array<int, kResourceCount>& layout_caps,
    const ServiceTimeConfig& svc, const UtilizationBand& band,
    const ReplicationPolicy& policy, std::uint64_t seed, double quantile = 0.997);

} // namespace pollflow
