#include "pollflow/types.hpp"

namespace pollflow {

std::optional<Resource> resource_from_name(std::string_view name) {
    for (Resource r : kAllResources) {
        if (name == resource_name(r)) return r;
    }
    return std::nullopt;
}

GeoPoint make_geo_point(double lat, double lon) {
    if (!(lat >= -90.0 && lat <= 90.0))
        throw ValidationError("latitude " + std::to_string(lat) + " outside [-90,90]");
    if (!(lon >= -180.0 && lon <= 180.0))
        throw ValidationError("longitude " + std::to_string(lon) + " outside [-180,180]");
    return GeoPoint{lat, lon};
}

void CostParameters::validate() const {
    if (per_km_rate < 0 || module_cost < 0 || exam_cost < 0 || dispatch_cost < 0)
        throw ValidationError("cost parameters must be non-negative");
    for (double d : deploy_cost_per_day)
        if (d < 0) throw ValidationError("deployment cost must be non-negative");
    if (module_capacity < 1) throw ValidationError("module capacity must be >= 1");
}

} // namespace pollflow
