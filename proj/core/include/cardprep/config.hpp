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

#ifndef CARDPREP_CONFIG_HPP
#define CARDPREP_CONFIG_HPP

#include <cstdint>
#include <string>

#include "cardprep/background.hpp"
#include "cardprep/components.hpp"
#include "cardprep/fixed.hpp"

namespace cardprep {

/// Every tunable of the pipeline. Defaults are the published operating
/// point (t_fixed 20, lambda 100, r 1.2..32, ra 5..90); zero means
/// "derive from the image" for the size-dependent knobs.
struct PipelineConfig {
    int t_fixed = 20;
    int lambda = 100;
    int block_size = 0; // 0: max(8, round(min(w,h)/48))

    std::int64_t r_min_milli = 1200;
    std::int64_t r_max_milli = 32000;
    std::int64_t ra_min_milli = 5000;
    std::int64_t ra_max_milli = 90000;
    std::int64_t min_area = 0;  // 0: max(4, image_area / 50000)
    int line_thickness = 0;     // 0: max(1, round(3 * min(w,h) / 768))
    int max_char_height = 0;    // 0: height / 8

    int fg_threshold = 250;
    int black_threshold = 128;
    int white_threshold = 250;
    int min_run = 2;

    int iou_min_milli = 500;

    ArithmeticMode mode = ArithmeticMode::Float;

    bool operator==(const PipelineConfig&) const = default;
};

/// Parse the flat `key = value` format ('#' comments, blank lines allowed).
/// Unknown keys and malformed values are ConfigErrors naming the key.
PipelineConfig parse_config(const std::string& text);

/// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const PipelineConfig& c);

/// File wrapper; IoError when unreadable.
PipelineConfig load_config_file(const std::string& path);

/// Size-dependent knobs resolved against a concrete image.
int resolved_block_size(const PipelineConfig& c, int width, int height);
ClassifierParams resolved_classifier(const PipelineConfig& c, int width, int height);

inline ThresholdParams threshold_params(const PipelineConfig& c) {
    return {c.t_fixed, c.lambda};
}
inline FeatureThresholds feature_thresholds(const PipelineConfig& c) {
    return {c.fg_threshold, c.black_threshold};
}

/// "1.2" <-> 1200 and friends; at most three fractional digits.
std::int64_t parse_milli(const std::string& text);
std::string format_milli(std::int64_t milli);

} // namespace cardprep

#endif // CARDPREP_CONFIG_HPP
