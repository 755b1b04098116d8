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

#ifndef CARDPREP_TESTS_ORACLE_HPP
#define CARDPREP_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "cardprep/raster.hpp"

namespace cardprep::testing {

struct OracleComponent {
    Rect bbox;
    std::vector<std::pair<int, int>> pixels; // (y, x), sorted
};

/// Brute-force 4-connectivity oracle: every foreground pixel starts with a
/// unique label and labels are min-propagated across 4-neighbors until a
/// fixpoint. Deliberately a different algorithmic family from the region
/// growing it checks.
inline std::vector<OracleComponent> brute_force_components(const GrayImage& img,
                                                           int fg_threshold) {
    const int w = img.width();
    const int h = img.height();
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (img.at(x, y) < fg_threshold) {
                label[static_cast<std::size_t>(y) * w + x] = y * w + x;
            }
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const std::size_t idx = static_cast<std::size_t>(y) * w + x;
                if (label[idx] < 0) continue;
                int best = label[idx];
                if (x > 0 && label[idx - 1] >= 0) best = std::min(best, label[idx - 1]);
                if (x + 1 < w && label[idx + 1] >= 0) best = std::min(best, label[idx + 1]);
                if (y > 0 && label[idx - w] >= 0) best = std::min(best, label[idx - w]);
                if (y + 1 < h && label[idx + w] >= 0) best = std::min(best, label[idx + w]);
                if (best < label[idx]) {
                    label[idx] = best;
                    changed = true;
                }
            }
        }
    }

    std::map<int, OracleComponent> groups;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int l = label[static_cast<std::size_t>(y) * w + x];
            if (l < 0) continue;
            OracleComponent& c = groups[l];
            if (c.pixels.empty()) {
                c.bbox = {x, y, 1, 1};
            } else {
                const int x0 = std::min(c.bbox.x, x);
                const int y0 = std::min(c.bbox.y, y);
                const int x1 = std::max(c.bbox.x + c.bbox.w - 1, x);
                const int y1 = std::max(c.bbox.y + c.bbox.h - 1, y);
                c.bbox = {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
            }
            c.pixels.emplace_back(y, x);
        }
    }
    std::vector<OracleComponent> out;
    out.reserve(groups.size());
    for (auto& [_, c] : groups) {
        std::sort(c.pixels.begin(), c.pixels.end());
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace cardprep::testing

#endif // CARDPREP_TESTS_ORACLE_HPP
