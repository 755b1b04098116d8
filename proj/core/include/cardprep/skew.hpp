/*
 * Copyright 2026 The cardprep authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CARDPREP_SKEW_HPP
#define CARDPREP_SKEW_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cardprep/fixed.hpp"
#include "cardprep/raster.hpp"

namespace cardprep {

/// Per-column heights from a region's bottom edge up to the first non-white
/// pixel. Columns whose dark run is too short (or absent) are invalid and
/// excluded from every statistic.
struct BottomProfile {
    std::vector<int> heights;      // one entry per column
    std::vector<std::uint8_t> valid;
    int n = 0;                     // column count == region width

    int valid_count() const {
        int c = 0;
        for (std::uint8_t v : valid) c += v;
        return c;
    }
};

/// Mean and mean absolute deviation of the valid profile heights, kept in
/// Q24.8 (1/256 px resolution).
struct ProfileStats {
    std::int32_t mu_q8 = 0;
    std::int32_t tau_q8 = 0;

    double mu() const { return mu_q8 / 256.0; }
    double tau() const { return tau_q8 / 256.0; }
};

/// Skew estimate from the leftmost / rightmost / middle surviving heights.
/// Positive angle means the baseline rises left to right.
struct SkewEstimate {
    ProfileStats stats;
    int h1 = 0, h2 = 0, h3 = 0; // selected heights
    int x1 = 0, x2 = 0, x3 = 0; // their column indices
    double alpha = 0.0;         // from pair h1-h2, degrees
    double beta = 0.0;          // from pair h1-h3
    double gamma = 0.0;         // from pair h3-h2
    double angle = 0.0;         // (alpha + beta + gamma) / 3
    bool low_confidence = false;
};

/// h[i] = distance from the bottom edge to the first pixel darker than
/// white_threshold, scanning upward; the column is valid only when that
/// pixel starts a run of at least min_run sub-threshold pixels.
BottomProfile bottom_profile(const GrayImage& region, int white_threshold,
                             int min_run);

/// nullopt when the profile has no valid column.
std::optional<ProfileStats> profile_stats(const BottomProfile& p);

/// Filters valid heights to [mu - tau, mu + tau], picks h1/h2/h3, averages
/// the three pairwise angles. Fewer than 2 survivors (or all at one column)
/// gives angle 0 with the low-confidence flag. nullopt when the profile has
/// no valid column.
std::optional<SkewEstimate> estimate_skew(const BottomProfile& p,
                                          ArithmeticMode mode = ArithmeticMode::Float);

/// rotate(region, -angle, 255); a low-confidence estimate returns the
/// region unchanged.
GrayImage deskew_region(const GrayImage& region, const SkewEstimate& est,
                        ArithmeticMode mode = ArithmeticMode::Float);

} // namespace cardprep

#endif // CARDPREP_SKEW_HPP
