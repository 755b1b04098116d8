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

#ifndef CARDPREP_COMPONENTS_HPP
#define CARDPREP_COMPONENTS_HPP

#include <cstdint>
#include <vector>

#include "cardprep/background.hpp"
#include "cardprep/raster.hpp"

namespace cardprep {

struct PixelCoord {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// One maximal 4-connected set of foreground pixels. Member coordinates are
/// sorted by (y, x); the bbox is tight on all four sides.
struct ConnectedComponent {
    int id = 0;
    Rect bbox;
    std::vector<PixelCoord> pixels;

    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(pixels.size());
    }
};

/// Feature vector of one component, everything measured over its bbox.
/// Ratios are kept as exact integer counts; the percent accessors are for
/// reporting, the classifier compares cross-multiplied.
struct CcFeatures {
    int width = 0;
    int height = 0;
    std::int64_t bbox_area = 0;
    std::int64_t member_count = 0; // the component's own pixels
    std::int64_t black_count = 0;  // bbox pixels with intensity <= black threshold
    std::int64_t gray_count = 0;   // bbox pixels strictly between the thresholds
    int v_segments = 0;            // foreground runs along the middle column
    int h_segments = 0;            // foreground runs along the middle row
    int cuts = 0;                  // middle-row transitions / 2
    bool has_clear_column = false; // some bbox column holds no black pixel
    bool has_clear_row = false;    // some bbox row holds no black pixel

    double aspect() const {
        return static_cast<double>(width) / static_cast<double>(height);
    }
    double fg_bg_ratio() const {
        return 100.0 * static_cast<double>(member_count) /
               static_cast<double>(bbox_area);
    }
    double black_density() const {
        return 100.0 * static_cast<double>(black_count) /
               static_cast<double>(bbox_area);
    }
    double gray_density() const {
        return 100.0 * static_cast<double>(gray_count) /
               static_cast<double>(bbox_area);
    }
};

/// Rule thresholds of the text/graphics classifier. Ratio bounds are stored
/// in thousandths so comparisons stay exact (r_min 1.2 -> 1200, ra_min 5% ->
/// 5000).
struct ClassifierParams {
    std::int64_t r_min_milli = 1200;
    std::int64_t r_max_milli = 32000;
    std::int64_t ra_min_milli = 5000;
    std::int64_t ra_max_milli = 90000;
    std::int64_t min_area = 4;
    int line_thickness = 3;
    int max_char_height = 96;

    /// Throws ConfigError unless r_min < r_max and ra_min < ra_max.
    void validate() const;
};

/// Intensity cutoffs shared by feature extraction: foreground is anything
/// below fg_threshold, black is at or below black_threshold, gray sits
/// between the two.
struct FeatureThresholds {
    int fg_threshold = 250;
    int black_threshold = 128;
};

enum class ComponentLabel : std::uint8_t {
    Text,
    Graphics,
};

struct ClassifiedComponent {
    ConnectedComponent cc;
    CcFeatures features;
    ComponentLabel label = ComponentLabel::Graphics;
};

struct SeparationResult {
    std::vector<ClassifiedComponent> components;
    GrayImage text_image; // input with graphics components erased to 255
};

/// All maximal 4-connected foreground sets (intensity < fg_threshold, and
/// never inside a Background block), ordered by (bbox.y, bbox.x, size).
std::vector<ConnectedComponent> extract_components(const GrayImage& img,
                                                   const BlockMask& mask,
                                                   int fg_threshold);

CcFeatures compute_features(const GrayImage& img, const ConnectedComponent& cc,
                            const FeatureThresholds& t);

/// Rule cascade: too small, line-like, aspect out of range, fill ratio out
/// of range, or an over-tall component with no clear straight path through
/// it -> Graphics; otherwise Text.
ComponentLabel classify_component(const CcFeatures& f, const ClassifierParams& p);

SeparationResult separate_text_graphics(const GrayImage& img, const BlockMask& mask,
                                        const ClassifierParams& p,
                                        const FeatureThresholds& t);

} // namespace cardprep

#endif // CARDPREP_COMPONENTS_HPP
