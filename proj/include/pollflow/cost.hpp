#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pollflow/types.hpp"

namespace pollflow {

// Great-circle distance, Earth radius 6371.0 km.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Pairwise per-order leg costs over all sites. Polling locations in different
// districts get an infinite entry; the warehouse reaches every site.
class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(std::vector<std::string> ids, std::vector<double> cost, int warehouse_index);

    int size() const { return static_cast<int>(ids_.size()); }
    int index_of(const std::string& id) const;
    const std::string& id_of(int index) const { return ids_.at(index); }
    int warehouse_index() const { return warehouse_index_; }

    double leg(int from, int to) const { return cost_.at(from * size() + to); }
    double leg(const std::string& from, const std::string& to) const {
        return leg(index_of(from), index_of(to));
    }
    bool reachable(int from, int to) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<double> cost_;
    int warehouse_index_ = -1;
};

CostMatrix build_cost_matrix(const std::vector<SiteRecord>& sites, const CostParameters& params);

// Money cost of moving `machine_count` machines over one finite leg:
// module packing + leg + per-machine examination + fixed dispatch.
double transfer_order_cost(long machine_count, double leg_cost, const CostParameters& params);

} // namespace pollflow
