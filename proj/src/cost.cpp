#include "pollflow/cost.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace pollflow {

namespace {
constexpr double kEarthRadiusKm = 6371.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
} // namespace

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    double lat1 = deg2rad(a.lat), lat2 = deg2rad(b.lat);
    double dlat = lat2 - lat1;
    double dlon = deg2rad(b.lon - a.lon);
    double s = std::sin(dlat / 2);
    double t = std::sin(dlon / 2);
    double h = s * s + std::cos(lat1) * std::cos(lat2) * t * t;
    h = std::min(1.0, h);
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

CostMatrix::CostMatrix(std::vector<std::string> ids, std::vector<double> cost, int warehouse_index)
    : ids_(std::move(ids)), cost_(std::move(cost)), warehouse_index_(warehouse_index) {
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
}

int CostMatrix::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown site '" + id + "'");
    return it->second;
}

bool CostMatrix::reachable(int from, int to) const { return std::isfinite(leg(from, to)); }

CostMatrix build_cost_matrix(const std::vector<SiteRecord>& sites, const CostParameters& params) {
    params.validate();
    int n = static_cast<int>(sites.size());
    int warehouse = -1;
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (!seen.insert(sites[i].id).second)
            throw ValidationError("duplicate site '" + sites[i].id + "'");
        if (sites[i].is_warehouse()) {
            if (warehouse >= 0) throw ValidationError("more than one warehouse");
            warehouse = i;
        }
    }
    if (warehouse < 0) throw ValidationError("missing warehouse");
    if (n < 2) throw ValidationError("need at least one polling location");

    std::vector<std::string> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = sites[i].id;
    std::vector<double> cost(static_cast<std::size_t>(n) * n, kInf);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                cost[i * n + j] = 0.0;
                continue;
            }
            bool crosses_districts = !sites[i].is_warehouse() && !sites[j].is_warehouse() &&
                                     sites[i].district != sites[j].district;
            if (crosses_districts) continue; // stays infinite
            cost[i * n + j] = haversine_km(sites[i].position, sites[j].position) * params.per_km_rate;
        }
    }
    return CostMatrix(std::move(ids), std::move(cost), warehouse);
}

double transfer_order_cost(long machine_count, double leg_cost, const CostParameters& params) {
    if (!std::isfinite(leg_cost)) throw ValidationError("forbidden transfer leg");
    if (machine_count < 1) throw ValidationError("transfer order needs at least one machine");
    long modules = (machine_count + params.module_capacity - 1) / params.module_capacity;
    return static_cast<double>(modules) * params.module_cost + leg_cost +
           static_cast<double>(machine_count) * params.exam_cost + params.dispatch_cost;
}

} // namespace pollflow
