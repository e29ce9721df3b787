#include "pollflow/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"
#include "pollflow/rng.hpp"

namespace pollflow {

void ServiceTimeConfig::validate() const {
    for (const auto& s : stages) {
        if (s.mean_min < 0) throw ValidationError("service mean must be non-negative");
        if (s.cv < 0) throw ValidationError("service cv must be non-negative");
        switch (s.family) {
            case ServiceFamily::Deterministic:
                if (s.cv != 0.0)
                    throw ValidationError("deterministic service cannot have cv > 0");
                break;
            case ServiceFamily::Exponential:
                if (!(s.mean_min > 0)) throw ValidationError("exponential service needs mean > 0");
                break;
            case ServiceFamily::Lognormal:
                if (!(s.mean_min > 0)) throw ValidationError("lognormal service needs mean > 0");
                if (!(s.cv > 0)) throw ValidationError("lognormal service needs cv > 0");
                break;
        }
    }
}

ArrivalSpec ArrivalSpec::from_rates(std::vector<double> rates) {
    for (double r : rates)
        if (r < 0) throw ValidationError("negative arrival rate");
    ArrivalSpec spec;
    spec.hourly_rates = std::move(rates);
    return spec;
}

ArrivalSpec ArrivalSpec::from_counts(std::vector<long> counts) {
    for (long c : counts)
        if (c < 0) throw ValidationError("negative arrival count");
    ArrivalSpec spec;
    spec.hourly_counts = std::move(counts);
    spec.verbatim_counts = true;
    return spec;
}

int ArrivalSpec::hours() const {
    return static_cast<int>(verbatim_counts ? hourly_counts.size() : hourly_rates.size());
}

void UtilizationBand::validate() const {
    for (int s = 0; s < kResourceCount; ++s) {
        if (!(lo[s] >= 0.0 && lo[s] <= hi[s] && hi[s] <= 1.0))
            throw ValidationError("utilization band must satisfy 0 <= lo <= hi <= 1");
    }
}

bool UtilizationBand::contains(const std::array<double, kResourceCount>& u) const {
    for (int s = 0; s < kResourceCount; ++s) {
        if (u[s] < lo[s] || u[s] > hi[s]) return false;
    }
    return true;
}

void ReplicationPolicy::validate() const {
    if (count < 1) throw ValidationError("replication count must be >= 1");
    if (adaptive) {
        if (min_replications < 2 || max_replications < min_replications)
            throw ValidationError("bad adaptive replication limits");
        if (!(ci_half_width_min > 0)) throw ValidationError("CI target must be > 0");
    }
}

double DaySimulationResult::mean_wait() const {
    if (waits.empty()) return 0.0;
    return std::accumulate(waits.begin(), waits.end(), 0.0) / static_cast<double>(waits.size());
}

// --- stream generation -------------------------------------------------------

std::vector<double> draw_arrival_times(const ArrivalSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> times;
    for (int h = 0; h < spec.hours(); ++h) {
        long n;
        if (spec.verbatim_counts) {
            n = spec.hourly_counts[h];
        } else {
            double rate = spec.hourly_rates[h];
            if (rate == 0.0) continue;
            std::poisson_distribution<long> poisson(rate);
            n = poisson(rng);
        }
        double start = h * kMinutesPerHour;
        for (long i = 0; i < n; ++i) times.push_back(start + unif(rng) * kMinutesPerHour);
    }
    std::sort(times.begin(), times.end());
    return times;
}

namespace {

double sample_service(const ServiceDistribution& dist, std::mt19937_64& rng) {
    switch (dist.family) {
        case ServiceFamily::Deterministic:
            return dist.mean_min;
        case ServiceFamily::Exponential: {
            std::exponential_distribution<double> exp(1.0 / dist.mean_min);
            return exp(rng);
        }
        case ServiceFamily::Lognormal: {
            double sigma2 = std::log(1.0 + dist.cv * dist.cv);
            double mu = std::log(dist.mean_min) - 0.5 * sigma2;
            std::lognormal_distribution<double> logn(mu, std::sqrt(sigma2));
            return logn(rng);
        }
    }
    return 0.0;
}

} // namespace

std::vector<double> draw_service_times(std::size_t voters, const ServiceTimeConfig& svc,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> service(voters * kResourceCount);
    for (std::size_t v = 0; v < voters; ++v)
        for (int s = 0; s < kResourceCount; ++s)
            service[v * kResourceCount + s] = sample_service(svc.stages[s], rng);
    return service;
}

// --- core tandem pass --------------------------------------------------------

TandemDayOutcome simulate_tandem_day(std::span<const double> arrival_times,
                                     const ResourceCombination& combo,
                                     std::span<const double> service_min) {
    const std::size_t n = arrival_times.size();
    if (service_min.size() != n * kResourceCount)
        throw ValidationError("service sample count does not match voters");
    if (combo.poll_pads < 1 || combo.bmds < 1 || combo.scanners < 1)
        throw ValidationError("resource combination needs at least one of each machine");

    TandemDayOutcome out;
    out.total_waits.assign(n, 0.0);
    for (auto& w : out.stage_waits) w.assign(n, 0.0);
    if (n == 0) return out;

    const int servers[kResourceCount] = {combo.poll_pads, combo.bmds, combo.scanners};

    // (ready time, voter) entering the current stage, FIFO by ready time.
    std::vector<std::pair<double, std::size_t>> entry(n);
    for (std::size_t i = 0; i < n; ++i) entry[i] = {arrival_times[i], i};

    std::vector<double> done(n);
    std::vector<double> free;
    for (int s = 0; s < kResourceCount; ++s) {
        free.assign(servers[s], 0.0);
        double busy = 0.0;
        for (const auto& [ready, voter] : entry) {
            auto next = std::min_element(free.begin(), free.end());
            double start = std::max(ready, *next);
            double svc = service_min[voter * kResourceCount + s];
            out.stage_waits[s][voter] = start - ready;
            out.total_waits[voter] += start - ready;
            done[voter] = start + svc;
            *next = done[voter];
            busy += svc;
        }
        out.stage_busy_min[s] = busy;
        for (std::size_t i = 0; i < n; ++i) entry[i] = {done[i], i};
        std::sort(entry.begin(), entry.end());
    }
    out.clear_time_min = std::max_element(done.begin(), done.end())[0];
    return out;
}

// --- replicated simulation ---------------------------------------------------

namespace {

struct Accumulator {
    std::vector<double> waits;
    std::array<double, kResourceCount> util_sum{};
    std::array<double, kResourceCount> util_sched_sum{};
    std::vector<double> rep_means; // per-replication mean wait, for the CI rule
    long voters = 0;
    int reps = 0;

    void add(const TandemDayOutcome& outcome, const ResourceCombination& combo,
             double scheduled_min) {
        const int servers[kResourceCount] = {combo.poll_pads, combo.bmds, combo.scanners};
        for (int s = 0; s < kResourceCount; ++s) {
            if (outcome.clear_time_min > 0)
                util_sum[s] += outcome.stage_busy_min[s] / (servers[s] * outcome.clear_time_min);
            if (scheduled_min > 0)
                util_sched_sum[s] += outcome.stage_busy_min[s] / (servers[s] * scheduled_min);
        }
        double sum = std::accumulate(outcome.total_waits.begin(), outcome.total_waits.end(), 0.0);
        rep_means.push_back(outcome.total_waits.empty()
                                ? 0.0
                                : sum / static_cast<double>(outcome.total_waits.size()));
        waits.insert(waits.end(), outcome.total_waits.begin(), outcome.total_waits.end());
        voters += static_cast<long>(outcome.total_waits.size());
        ++reps;
    }

    DaySimulationResult finish() && {
        DaySimulationResult res;
        res.replications = reps;
        res.total_voters = voters;
        res.waits = std::move(waits);
        for (int s = 0; s < kResourceCount; ++s) {
            res.utilization[s] = reps > 0 ? util_sum[s] / reps : 0.0;
            res.utilization_scheduled[s] = reps > 0 ? util_sched_sum[s] / reps : 0.0;
        }
        return res;
    }
};

bool ci_met(const std::vector<double>& rep_means, const ReplicationPolicy& policy) {
    int n = static_cast<int>(rep_means.size());
    if (n < policy.min_replications) return false;
    double mean = std::accumulate(rep_means.begin(), rep_means.end(), 0.0) / n;
    double ss = 0.0;
    for (double m : rep_means) ss += (m - mean) * (m - mean);
    double half_width = 1.96 * std::sqrt(ss / (n - 1) / n);
    return half_width < policy.ci_half_width_min;
}

} // namespace

DaySimulationResult simulate_voting_day(const ArrivalSpec& spec, const ResourceCombination& combo,
                                        const ServiceTimeConfig& svc,
                                        const ReplicationPolicy& policy, std::uint64_t seed) {
    svc.validate();
    policy.validate();
    double scheduled_min = spec.hours() * kMinutesPerHour;
    Accumulator acc;
    int limit = policy.adaptive ? policy.max_replications : policy.count;
    for (int rep = 0; rep < limit; ++rep) {
        auto arrivals = draw_arrival_times(spec, derive_seed(seed, "arrivals", rep));
        auto service = draw_service_times(arrivals.size(), svc, derive_seed(seed, "services", rep));
        acc.add(simulate_tandem_day(arrivals, combo, service), combo, scheduled_min);
        if (policy.adaptive && ci_met(acc.rep_means, policy)) break;
    }
    return std::move(acc).finish();
}

double robust_wait(std::span<const double> samples, double quantile) {
    if (!(quantile > 0.0 && quantile < 1.0)) throw ValidationError("quantile must lie in (0,1)");
    if (samples.empty()) return 0.0;
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    auto n = static_cast<double>(sorted.size());
    auto index = static_cast<std::size_t>(std::ceil(quantile * n - 1e-9)); // 1-based
    index = std::clamp<std::size_t>(index, 1, sorted.size());
    return sorted[index - 1];
}

std::vector<ResourceCombination>
enumerate_feasible_combinations(const std::array<int, kResourceCount>& layout_caps) {
    for (int cap : layout_caps)
        if (cap < 1) throw ValidationError("location cannot host required resource");
    std::vector<ResourceCombination> combos;
    combos.reserve(static_cast<std::size_t>(layout_caps[0]) * layout_caps[1] * layout_caps[2]);
    for (int p = 1; p <= layout_caps[0]; ++p)
        for (int b = 1; b <= layout_caps[1]; ++b)
            for (int s = 1; s <= layout_caps[2]; ++s)
                combos.push_back(ResourceCombination{p, b, s});
    return combos;
}

std::vector<EvaluatedCombination> evaluate_location_day(
    const ArrivalSpec& spec, const std::array<int, kResourceCount>& layout_caps,
    const ServiceTimeConfig& svc, const UtilizationBand& band, const ReplicationPolicy& policy,
    std::uint64_t seed, double quantile) {
    svc.validate();
    band.validate();
    policy.validate();
    auto combos = enumerate_feasible_combinations(layout_caps);
    double scheduled_min = spec.hours() * kMinutesPerHour;

    std::vector<Accumulator> acc(combos.size());
    int limit = policy.adaptive ? policy.max_replications : policy.count;
    int done_reps = 0;
    const int batch = policy.adaptive ? 10 : limit;
    while (done_reps < limit) {
        int todo = std::min(batch, limit - done_reps);
        // Shared arrival and service streams per replication: every combination
        // sees the same voters (common random numbers).
        std::vector<std::vector<double>> arrivals(todo), service(todo);
        for (int r = 0; r < todo; ++r) {
            int rep = done_reps + r;
            arrivals[r] = draw_arrival_times(spec, derive_seed(seed, "arrivals", rep));
            service[r] =
                draw_service_times(arrivals[r].size(), svc, derive_seed(seed, "services", rep));
        }
        detail::parallel_for(combos.size(), [&](std::size_t c) {
            for (int r = 0; r < todo; ++r) {
                acc[c].add(simulate_tandem_day(arrivals[r], combos[c], service[r]), combos[c],
                           scheduled_min);
            }
        });
        done_reps += todo;
        if (policy.adaptive) {
            bool all_met = true;
            for (const auto& a : acc) all_met &= ci_met(a.rep_means, policy);
            if (all_met) break;
        }
    }

    std::vector<EvaluatedCombination> out(combos.size());
    for (std::size_t c = 0; c < combos.size(); ++c) {
        DaySimulationResult res = std::move(acc[c]).finish();
        out[c].combo = combos[c];
        out[c].utilization = res.utilization;
        out[c].utilization_scheduled = res.utilization_scheduled;
        out[c].passed_filter = band.contains(res.utilization);
        out[c].robust_wait_min = robust_wait(res.waits, quantile);
    }
    return out;
}

} // namespace pollflow
