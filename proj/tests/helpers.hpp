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

#ifndef CARDPREP_TESTS_HELPERS_HPP
#define CARDPREP_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "cardprep/raster.hpp"

namespace cardprep::testing {

/// Build an image from ASCII art: '#' -> 0 (black), '.' -> 255 (white),
/// 'g' -> 200 (gray), digits 0-9 -> value * 28 (so '9' is near-white).
inline GrayImage image_from(const std::vector<std::string>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    GrayImage img(w, h, 255);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const char c = rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            std::uint8_t v = 255;
            if (c == '#') v = 0;
            else if (c == '.') v = 255;
            else if (c == 'g') v = 200;
            else if (c >= '0' && c <= '9') v = static_cast<std::uint8_t>((c - '0') * 28);
            img.set(x, y, v);
        }
    }
    return img;
}

inline GrayImage random_image(std::mt19937& rng, int max_side = 64) {
    const int w = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
    const int h = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_side));
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            img.set(x, y, static_cast<std::uint8_t>(rng() % 256));
        }
    }
    return img;
}

/// Mostly-binary random image: dark blobs on white, for component tests.
inline GrayImage random_binary_image(std::mt19937& rng, int max_side = 64) {
    const int w = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_side - 1));
    const int h = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_side - 1));
    GrayImage img(w, h, 255);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (rng() % 100 < 35) {
                img.set(x, y, static_cast<std::uint8_t>(rng() % 200));
            }
        }
    }
    return img;
}

} // namespace cardprep::testing

#endif // CARDPREP_TESTS_HELPERS_HPP
