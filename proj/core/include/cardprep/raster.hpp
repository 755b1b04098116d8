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

#ifndef CARDPREP_RASTER_HPP
#define CARDPREP_RASTER_HPP

#include <cstdint>
#include <vector>

#include "cardprep/fixed.hpp"

namespace cardprep {

/// 8-bit single-channel raster, row-major. The pixel carrier for every stage.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    void set(int x, int y, std::uint8_t v) {
        pixels_[static_cast<std::size_t>(y) * width_ + x] = v;
    }

    const std::uint8_t* row(int y) const {
        return pixels_.data() + static_cast<std::size_t>(y) * width_;
    }
    std::uint8_t* row(int y) {
        return pixels_.data() + static_cast<std::size_t>(y) * width_;
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Axis-aligned pixel rectangle: top-left corner plus extent.
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
    bool contains(int px, int py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
    bool operator==(const Rect&) const = default;
};

/// True when r lies fully inside a width x height image.
bool rect_inside(const Rect& r, int width, int height);

/// Copy of the sub-image covered by r. Throws BoundsError if r leaves img.
GrayImage crop(const GrayImage& img, const Rect& r);

/// Rotation about the image center onto an enlarged canvas; positive angles
/// make horizontal content rise left to right. Sampling is nearest-neighbor
/// by inverse mapping; pixels with no source take `fill`. |angle| must be
/// at most 45 degrees (DomainError otherwise).
GrayImage rotate(const GrayImage& img, double angle_deg, std::uint8_t fill,
                 ArithmeticMode mode = ArithmeticMode::Float);

/// Precomputed geometry of one rotate() call, exposed so the float and the
/// fixed-point coordinate mappings can be compared directly.
struct RotateMap {
    int src_w = 0, src_h = 0;
    int out_w = 0, out_h = 0;
    double cos_t = 1.0, sin_t = 0.0;
    std::int64_t cos_q16 = kFixedOne, sin_q16 = 0; // Q16.16
};

RotateMap make_rotate_map(int width, int height, double angle_deg);

/// Source pixel for output pixel (ox, oy); may land outside the source.
struct SourceCoord {
    int x = 0, y = 0;
};
SourceCoord map_source_float(const RotateMap& m, int ox, int oy);
SourceCoord map_source_fixed(const RotateMap& m, int ox, int oy);

} // namespace cardprep

#endif // CARDPREP_RASTER_HPP
