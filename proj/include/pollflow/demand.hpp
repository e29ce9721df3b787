#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pollflow/errors.hpp"

namespace pollflow {

// Daily voter totals from a reference election, one row of D entries per
// location (D-1 early days followed by election day).
struct HistoricalTurnout {
    int horizon_days = 0; // D
    std::map<std::string, std::vector<long>> totals;

    static HistoricalTurnout create(int horizon_days,
                                    std::map<std::string, std::vector<long>> totals);
};

// Hourly arrival counts observed on the elapsed days of the current election.
// Days are a contiguous prefix 1..e of the horizon.
struct ObservedArrivals {
    int hours = 0; // H buckets per day
    std::map<std::string, std::vector<std::vector<long>>> days;

    static ObservedArrivals empty(int hours, const std::vector<std::string>& locations);
    static ObservedArrivals create(int hours,
                                   std::map<std::string, std::vector<std::vector<long>>> days);

    int elapsed_days() const;
    void append_day(const std::map<std::string, std::vector<long>>& counts);
};

// Shared within-day arrival shape: H fractions summing to 1.
class HourlyProfile {
public:
    static HourlyProfile create(std::vector<double> fractions);
    static HourlyProfile uniform(int hours);

    int hours() const { return static_cast<int>(fractions_.size()); }
    double fraction(int hour) const { return fractions_.at(hour); }
    const std::vector<double>& fractions() const { return fractions_; }

private:
    std::vector<double> fractions_;
};

// Expected arrivals per hour for every location and every remaining day
// (first_day .. D, 1-based).
struct DemandForecast {
    int first_day = 1;
    int horizon_days = 0;
    std::map<std::string, std::vector<std::vector<double>>> rates;

    const std::vector<double>& day_rates(const std::string& location, int day) const;
};

struct ScalingBounds {
    double min = 0.1;
    double max = 10.0;
};

// Through-origin least squares on daily totals: beta = sum(o*h) / sum(h*h),
// clamped to the given bounds. Throws ValidationError on "no elapsed days"
// (empty input) or "degenerate historical" (sum of squares is zero).
double fit_scaling_factor(std::span<const double> historical_totals,
                          std::span<const double> observed_totals,
                          ScalingBounds bounds = {});

// Per-location scaling of historical daily totals (beta = 1 when no days have
// elapsed), expanded to hourly rates through the profile.
DemandForecast build_forecast(const HistoricalTurnout& historical,
                              const ObservedArrivals& observed,
                              const HourlyProfile& profile,
                              ScalingBounds bounds = {});

// Poisson draw per hour. Deterministic for a fixed seed.
std::vector<long> realize_arrivals(std::span<const double> hourly_rates, std::uint64_t seed);

} // namespace pollflow
