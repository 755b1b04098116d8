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

#ifndef CARDPREP_SYNTH_HPP
#define CARDPREP_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cardprep/eval.hpp"
#include "cardprep/raster.hpp"

namespace cardprep {

/// Recipe for one synthetic card. Text lines are runs of dark glyph boxes
/// with inter-character gaps riding on a thin gray baseline bar (so a line
/// is a single connected region and its bottom profile is a clean edge);
/// logos are filled squares, rules 1-3 px lines. Same spec + seed gives a
/// bit-identical card and ground truth.
struct SynthCardSpec {
    int width = 1024;
    int height = 768;
    int n_text_lines = 4;
    std::vector<double> skew_per_line; // degrees; missing entries mean 0
    bool include_logo = true;
    bool include_lines = true; // horizontal/vertical rules
    int background = 252;      // base intensity; +-2 noise rides on it
    std::uint64_t seed = 1;
};

struct SynthCard {
    GrayImage image;
    std::vector<GroundTruthRegion> truth;
};

SynthCard generate_card(const SynthCardSpec& spec);

/// Stand-alone single-line text region on white, tilted by angle_deg; the
/// substrate of the skew-recovery checks.
GrayImage make_skewed_line_region(int line_width, int glyph_height,
                                  double angle_deg, std::uint64_t seed);

/// One `label x y w h [angle]` line per region.
std::string format_truth(const std::vector<GroundTruthRegion>& truth);

/// `key = value` synth spec files: width, height, lines, skew (comma list),
/// logo, rules, background, seed. Unknown keys are ConfigErrors.
SynthCardSpec parse_synth_spec(const std::string& text);

} // namespace cardprep

#endif // CARDPREP_SYNTH_HPP
