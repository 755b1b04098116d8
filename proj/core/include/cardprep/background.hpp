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

#ifndef CARDPREP_BACKGROUND_HPP
#define CARDPREP_BACKGROUND_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cardprep/raster.hpp"

namespace cardprep {

/// Min/max intensity of one block; variation is their difference.
struct BlockStats {
    int g_min = 0;
    int g_max = 0;
    int variation() const { return g_max - g_min; }
};

/// Knobs of the adaptive block threshold: T_sigma = t_fixed + variable part.
struct ThresholdParams {
    int t_fixed = 20;
    int lambda = 100;
};

enum class BlockLabel : std::uint8_t {
    Background,
    Foreground,
};

/// Per-block labels over the image, blocks of block_size pixels per side
/// (edge blocks clipped to the image).
class BlockMask {
public:
    BlockMask() = default;
    BlockMask(int cols, int rows, int block_size, BlockLabel fill = BlockLabel::Foreground)
        : cols_(cols), rows_(rows), block_size_(block_size),
          labels_(static_cast<std::size_t>(cols) * rows, fill) {}

    /// Mask that gates nothing; handy when components are extracted from an
    /// image that never went through background elimination.
    static BlockMask all_foreground(int width, int height, int block_size);

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    int block_size() const { return block_size_; }

    BlockLabel at(int bx, int by) const {
        return labels_[static_cast<std::size_t>(by) * cols_ + bx];
    }
    void set(int bx, int by, BlockLabel v) {
        labels_[static_cast<std::size_t>(by) * cols_ + bx] = v;
    }
    BlockLabel at_pixel(int x, int y) const {
        return at(x / block_size_, y / block_size_);
    }

    bool operator==(const BlockMask&) const = default;

private:
    int cols_ = 0;
    int rows_ = 0;
    int block_size_ = 1;
    std::vector<BlockLabel> labels_;
};

/// Exact min/max over the pixels of r. Throws DomainError on an empty or
/// out-of-bounds rect.
BlockStats block_stats(const GrayImage& img, const Rect& r);

/// T_sigma = t_fixed + [(g_min - lambda) - min(t_fixed, g_min - lambda)] * 2,
/// all in integers. Grows as the block's intensity band moves up.
int adaptive_threshold(int g_min, const ThresholdParams& p);

/// Background iff g_min exceeds lambda AND the variation stays under the
/// adaptive threshold; everything else is foreground.
BlockLabel classify_block(const BlockStats& s, const ThresholdParams& p);

/// Splits the image into block_size x block_size tiles (edge tiles clipped),
/// classifies each, whitens background tiles to 255 and returns the
/// suppressed image plus the label mask. block_size < 2 is a ConfigError.
std::pair<GrayImage, BlockMask> eliminate_background(const GrayImage& img,
                                                     const ThresholdParams& p,
                                                     int block_size);

/// Default block side for a given image: max(8, round(min(w,h)/48)).
int default_block_size(int width, int height);

} // namespace cardprep

#endif // CARDPREP_BACKGROUND_HPP
