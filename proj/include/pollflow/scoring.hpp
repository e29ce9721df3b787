#pragma once

#include <string>
#include <vector>

#include "pollflow/errors.hpp"

namespace pollflow {

// Piecewise-constant map from robust wait to a score in [0,1]. All waits
// inside one band are treated as equivalent, which keeps the optimizer from
// gold-plating locations that already meet expectations.
class IndifferenceZoneSpec {
public:
    struct Band {
        double upper_min; // exclusive upper wait threshold
        double score;
    };

    static IndifferenceZoneSpec create(std::vector<Band> bands, double terminal_score);

    // <30 -> 1.0, 30-45 -> 0.8, 45-60 -> 0.6, 60-90 -> 0.4, 90-150 -> 0.2,
    // >=150 -> 0.0. Mirrors the six reporting ranges.
    static IndifferenceZoneSpec defaults();

    double score_of_wait(double wait_min) const;

    // Band index for reporting: 0..bands() inclusive, the last being the
    // terminal band.
    int band_index(double wait_min) const;
    int band_count() const { return static_cast<int>(bands_.size()) + 1; }
    std::string band_label(int index) const;

    // Largest wait w such that score_of_wait(w') >= min_score for all w' < w;
    // infinity when even the terminal band qualifies.
    double wait_cap_for_score(double min_score) const;

    const std::vector<Band>& bands() const { return bands_; }
    double terminal_score() const { return terminal_score_; }

private:
    std::vector<Band> bands_;
    double terminal_score_ = 0.0;
};

} // namespace pollflow
