#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pollflow/errors.hpp"

namespace pollflow {

// The three machine types that flow through the network. Array indices
// throughout the code follow this order.
enum class Resource : int { PollPads = 0, Bmds = 1, Scanners = 2 };

inline constexpr int kResourceCount = 3;
inline constexpr std::array<Resource, kResourceCount> kAllResources{
    Resource::PollPads, Resource::Bmds, Resource::Scanners};

constexpr const char* resource_name(Resource r) {
    switch (r) {
        case Resource::PollPads: return "pollpads";
        case Resource::Bmds: return "bmds";
        case Resource::Scanners: return "scanners";
    }
    return "?";
}

std::optional<Resource> resource_from_name(std::string_view name);

// Machine counts assigned to one location for one day.
struct ResourceCombination {
    int poll_pads = 1;
    int bmds = 1;
    int scanners = 1;

    int count(Resource r) const {
        switch (r) {
            case Resource::PollPads: return poll_pads;
            case Resource::Bmds: return bmds;
            case Resource::Scanners: return scanners;
        }
        return 0;
    }

    auto operator<=>(const ResourceCombination&) const = default;
};

struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

// Throws ValidationError if out of range.
GeoPoint make_geo_point(double lat, double lon);

enum class SiteKind { PollingLocation, Warehouse };

struct SiteRecord {
    std::string id;
    std::string name;
    GeoPoint position;
    int district = 0;
    std::array<int, kResourceCount> layout_caps{1, 1, 1};
    long registered = 0;
    SiteKind kind = SiteKind::PollingLocation;

    bool is_warehouse() const { return kind == SiteKind::Warehouse; }
};

// Money model for transfers and deployments. All values are non-negative;
// magnitudes are configuration, not calibrated constants.
struct CostParameters {
    double per_km_rate = 1.0;        // money per km per order leg
    double module_cost = 10.0;       // money per shipping module
    int module_capacity = 4;         // machines per module
    double exam_cost = 2.0;          // money per transferred machine
    std::array<double, kResourceCount> deploy_cost_per_day{1.0, 1.0, 1.0};
    double dispatch_cost = 5.0;      // fixed money per transfer order

    void validate() const;
};

using ResourceCounts = std::array<long, kResourceCount>;

inline ResourceCounts counts_of(const ResourceCombination& c) {
    return {static_cast<long>(c.poll_pads), static_cast<long>(c.bmds),
            static_cast<long>(c.scanners)};
}

} // namespace pollflow
