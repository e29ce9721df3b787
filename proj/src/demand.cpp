#include "pollflow/demand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pollflow/rng.hpp"

namespace pollflow {

HistoricalTurnout HistoricalTurnout::create(int horizon_days,
                                            std::map<std::string, std::vector<long>> totals) {
    if (horizon_days < 1) throw ValidationError("horizon must cover at least one day");
    if (totals.empty()) throw ValidationError("historical turnout has no locations");
    for (const auto& [id, days] : totals) {
        if (static_cast<int>(days.size()) != horizon_days)
            throw ValidationError("location '" + id + "' has " + std::to_string(days.size()) +
                                  " historical entries, expected " + std::to_string(horizon_days));
        bool any_positive = false;
        for (long v : days) {
            if (v < 0) throw ValidationError("location '" + id + "' has a negative turnout entry");
            any_positive |= v > 0;
        }
        if (!any_positive)
            throw ValidationError("location '" + id + "' has all-zero historical turnout");
    }
    return HistoricalTurnout{horizon_days, std::move(totals)};
}

ObservedArrivals ObservedArrivals::empty(int hours, const std::vector<std::string>& locations) {
    ObservedArrivals obs;
    obs.hours = hours;
    for (const auto& id : locations) obs.days[id] = {};
    return obs;
}

ObservedArrivals ObservedArrivals::create(
    int hours, std::map<std::string, std::vector<std::vector<long>>> days) {
    if (hours < 1) throw ValidationError("need at least one voting hour");
    std::size_t elapsed = days.empty() ? 0 : days.begin()->second.size();
    for (const auto& [id, records] : days) {
        if (records.size() != elapsed)
            throw ValidationError("location '" + id + "' has a different number of observed days");
        for (const auto& rec : records) {
            if (static_cast<int>(rec.size()) != hours)
                throw ValidationError("location '" + id + "' has a day with " +
                                      std::to_string(rec.size()) + " hourly buckets, expected " +
                                      std::to_string(hours));
            for (long v : rec)
                if (v < 0) throw ValidationError("negative arrival count at '" + id + "'");
        }
    }
    ObservedArrivals obs;
    obs.hours = hours;
    obs.days = std::move(days);
    return obs;
}

int ObservedArrivals::elapsed_days() const {
    return days.empty() ? 0 : static_cast<int>(days.begin()->second.size());
}

void ObservedArrivals::append_day(const std::map<std::string, std::vector<long>>& counts) {
    for (auto& [id, records] : days) {
        auto it = counts.find(id);
        if (it == counts.end()) throw ValidationError("observed day missing location '" + id + "'");
        if (static_cast<int>(it->second.size()) != hours)
            throw ValidationError("observed day for '" + id + "' has wrong hour count");
        records.push_back(it->second);
    }
}

HourlyProfile HourlyProfile::create(std::vector<double> fractions) {
    if (fractions.empty()) throw ValidationError("hourly profile is empty");
    double sum = 0.0;
    for (double f : fractions) {
        if (f < 0.0 || f > 1.0) throw ValidationError("profile fraction outside [0,1]");
        sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ValidationError("profile sum " + std::to_string(sum) + " != 1");
    HourlyProfile p;
    p.fractions_ = std::move(fractions);
    return p;
}

HourlyProfile HourlyProfile::uniform(int hours) {
    if (hours < 1) throw ValidationError("need at least one voting hour");
    std::vector<double> f(hours, 1.0 / hours);
    // make the sum exactly 1 regardless of the divisor
    f.back() = 1.0 - std::accumulate(f.begin(), f.end() - 1, 0.0);
    return create(std::move(f));
}

const std::vector<double>& DemandForecast::day_rates(const std::string& location, int day) const {
    auto it = rates.find(location);
    if (it == rates.end()) throw ValidationError("forecast missing location '" + location + "'");
    int offset = day - first_day;
    if (offset < 0 || offset >= static_cast<int>(it->second.size()))
        throw ValidationError("forecast missing day " + std::to_string(day));
    return it->second[offset];
}

double fit_scaling_factor(std::span<const double> historical_totals,
                          std::span<const double> observed_totals, ScalingBounds bounds) {
    if (observed_totals.empty()) throw ValidationError("no elapsed days");
    if (historical_totals.size() != observed_totals.size())
        throw ValidationError("historical and observed day counts differ");
    double hh = 0.0, oh = 0.0;
    for (std::size_t i = 0; i < historical_totals.size(); ++i) {
        hh += historical_totals[i] * historical_totals[i];
        oh += observed_totals[i] * historical_totals[i];
    }
    if (hh <= 0.0) throw ValidationError("degenerate historical");
    return std::clamp(oh / hh, bounds.min, bounds.max);
}

DemandForecast build_forecast(const HistoricalTurnout& historical, const ObservedArrivals& observed,
                              const HourlyProfile& profile, ScalingBounds bounds) {
    for (const auto& [id, _] : historical.totals)
        if (!observed.days.count(id)) throw ValidationError("inconsistent location sets");
    for (const auto& [id, _] : observed.days)
        if (!historical.totals.count(id)) throw ValidationError("inconsistent location sets");

    int elapsed = observed.elapsed_days();
    if (elapsed >= historical.horizon_days)
        throw ValidationError("no remaining days to forecast");

    DemandForecast forecast;
    forecast.first_day = elapsed + 1;
    forecast.horizon_days = historical.horizon_days;
    for (const auto& [id, hist_days] : historical.totals) {
        double beta = 1.0;
        if (elapsed > 0) {
            std::vector<double> h(elapsed), o(elapsed);
            const auto& obs_days = observed.days.at(id);
            bool any_signal = false;
            for (int d = 0; d < elapsed; ++d) {
                h[d] = static_cast<double>(hist_days[d]);
                o[d] = static_cast<double>(
                    std::accumulate(obs_days[d].begin(), obs_days[d].end(), 0L));
                any_signal |= h[d] > 0 || o[d] > 0;
            }
            // A location with zero history and zero observations so far (e.g.
            // open on election day only) carries no information; keep beta = 1.
            if (any_signal) beta = fit_scaling_factor(h, o, bounds);
        }
        auto& days_out = forecast.rates[id];
        days_out.reserve(historical.horizon_days - elapsed);
        for (int d = elapsed; d < historical.horizon_days; ++d) {
            double total = beta * static_cast<double>(hist_days[d]);
            std::vector<double> hourly(profile.hours());
            for (int t = 0; t < profile.hours(); ++t) hourly[t] = total * profile.fraction(t);
            days_out.push_back(std::move(hourly));
        }
    }
    return forecast;
}

std::vector<long> realize_arrivals(std::span<const double> hourly_rates, std::uint64_t seed) {
    std::mt19937_64 rng(derive_seed(seed));
    std::vector<long> counts(hourly_rates.size(), 0);
    for (std::size_t t = 0; t < hourly_rates.size(); ++t) {
        double rate = hourly_rates[t];
        if (rate < 0) throw ValidationError("negative arrival rate");
        if (rate == 0.0) continue;
        std::poisson_distribution<long> poisson(rate);
        counts[t] = poisson(rng);
    }
    return counts;
}

} // namespace pollflow
