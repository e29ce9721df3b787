#include "pollflow/scoring.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pollflow {

IndifferenceZoneSpec IndifferenceZoneSpec::create(std::vector<Band> bands, double terminal_score) {
    if (bands.empty()) throw ValidationError("zone spec needs at least one band");
    if (!(bands.front().upper_min > 0)) throw ValidationError("first zone threshold must be > 0");
    double prev_upper = 0.0;
    double prev_score = std::numeric_limits<double>::infinity();
    for (const Band& b : bands) {
        if (!(b.upper_min > prev_upper))
            throw ValidationError("zone thresholds must be strictly increasing");
        if (b.score < 0.0 || b.score > 1.0) throw ValidationError("zone scores must lie in [0,1]");
        if (b.score > prev_score) throw ValidationError("zone scores must be nonincreasing");
        prev_upper = b.upper_min;
        prev_score = b.score;
    }
    if (terminal_score < 0.0 || terminal_score > 1.0 || terminal_score > prev_score)
        throw ValidationError("terminal score must lie in [0,1] and not exceed the last band");
    IndifferenceZoneSpec spec;
    spec.bands_ = std::move(bands);
    spec.terminal_score_ = terminal_score;
    return spec;
}

IndifferenceZoneSpec IndifferenceZoneSpec::defaults() {
    return create({{30.0, 1.0}, {45.0, 0.8}, {60.0, 0.6}, {90.0, 0.4}, {150.0, 0.2}}, 0.0);
}

double IndifferenceZoneSpec::score_of_wait(double wait_min) const {
    for (const Band& b : bands_) {
        if (wait_min < b.upper_min) return b.score;
    }
    return terminal_score_;
}

int IndifferenceZoneSpec::band_index(double wait_min) const {
    for (std::size_t i = 0; i < bands_.size(); ++i) {
        if (wait_min < bands_[i].upper_min) return static_cast<int>(i);
    }
    return static_cast<int>(bands_.size());
}

namespace {
std::string trim_minutes(double v) {
    // 30 -> "30", 37.5 -> "37.5"
    std::ostringstream out;
    out << v;
    return out.str();
}
} // namespace

std::string IndifferenceZoneSpec::band_label(int index) const {
    if (index < 0 || index > static_cast<int>(bands_.size()))
        throw ValidationError("band index out of range");
    if (index == static_cast<int>(bands_.size()))
        return ">=" + trim_minutes(bands_.back().upper_min);
    if (index == 0) return "<" + trim_minutes(bands_[0].upper_min);
    return trim_minutes(bands_[index - 1].upper_min) + "-" + trim_minutes(bands_[index].upper_min);
}

double IndifferenceZoneSpec::wait_cap_for_score(double min_score) const {
    if (terminal_score_ >= min_score) return std::numeric_limits<double>::infinity();
    double cap = 0.0;
    for (const Band& b : bands_) {
        if (b.score >= min_score) cap = b.upper_min;
    }
    return cap;
}

} // namespace pollflow
