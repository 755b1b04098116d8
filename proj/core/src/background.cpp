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

#include "cardprep/background.hpp"

#include <algorithm>
#include <string>

#include "cardprep/error.hpp"

namespace cardprep {

BlockMask BlockMask::all_foreground(int width, int height, int block_size) {
    const int cols = (width + block_size - 1) / block_size;
    const int rows = (height + block_size - 1) / block_size;
    return BlockMask(cols, rows, block_size, BlockLabel::Foreground);
}

BlockStats block_stats(const GrayImage& img, const Rect& r) {
    if (!rect_inside(r, img.width(), img.height())) {
        throw DomainError("block_stats rect (" + std::to_string(r.x) + "," +
                          std::to_string(r.y) + "," + std::to_string(r.w) + "," +
                          std::to_string(r.h) + ") empty or outside image");
    }
    int lo = 255;
    int hi = 0;
    for (int j = 0; j < r.h; ++j) {
        const std::uint8_t* row = img.row(r.y + j) + r.x;
        for (int i = 0; i < r.w; ++i) {
            const int v = row[i];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

int adaptive_threshold(int g_min, const ThresholdParams& p) {
    const int excess = g_min - p.lambda;
    const int t_var = (excess - std::min(p.t_fixed, excess)) * 2;
    return p.t_fixed + t_var;
}

BlockLabel classify_block(const BlockStats& s, const ThresholdParams& p) {
    if (s.g_min > p.lambda && s.variation() < adaptive_threshold(s.g_min, p)) {
        return BlockLabel::Background;
    }
    return BlockLabel::Foreground;
}

std::pair<GrayImage, BlockMask> eliminate_background(const GrayImage& img,
                                                     const ThresholdParams& p,
                                                     int block_size) {
    if (block_size < 2) {
        throw ConfigError("block_size must be at least 2, got " +
                          std::to_string(block_size));
    }
    const int cols = (img.width() + block_size - 1) / block_size;
    const int rows = (img.height() + block_size - 1) / block_size;
    GrayImage out = img;
    BlockMask mask(cols, rows, block_size);

    for (int by = 0; by < rows; ++by) {
        for (int bx = 0; bx < cols; ++bx) {
            Rect r;
            r.x = bx * block_size;
            r.y = by * block_size;
            r.w = std::min(block_size, img.width() - r.x);
            r.h = std::min(block_size, img.height() - r.y);
            const BlockLabel label = classify_block(block_stats(img, r), p);
            mask.set(bx, by, label);
            if (label == BlockLabel::Background) {
                for (int j = 0; j < r.h; ++j) {
                    std::uint8_t* row = out.row(r.y + j) + r.x;
                    std::fill(row, row + r.w, std::uint8_t{255});
                }
            }
        }
    }
    return {std::move(out), std::move(mask)};
}

int default_block_size(int width, int height) {
    const int m = std::min(width, height);
    const int rounded = (2 * m + 48) / 96; // round(m / 48)
    return std::max(8, rounded);
}

} // namespace cardprep
