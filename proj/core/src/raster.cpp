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

#include "cardprep/raster.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "cardprep/error.hpp"

namespace cardprep {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw DomainError("image dimensions must be at least 1x1, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
}

} // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height);
    const std::size_t expected = static_cast<std::size_t>(width) * height;
    if (pixels_.size() != expected) {
        throw DomainError("pixel buffer size " + std::to_string(pixels_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
}

bool rect_inside(const Rect& r, int width, int height) {
    return r.x >= 0 && r.y >= 0 && r.w >= 1 && r.h >= 1 &&
           r.x + r.w <= width && r.y + r.h <= height;
}

GrayImage crop(const GrayImage& img, const Rect& r) {
    if (!rect_inside(r, img.width(), img.height())) {
        throw BoundsError("crop rect (" + std::to_string(r.x) + "," +
                          std::to_string(r.y) + "," + std::to_string(r.w) + "," +
                          std::to_string(r.h) + ") outside " +
                          std::to_string(img.width()) + "x" +
                          std::to_string(img.height()) + " image");
    }
    GrayImage out(r.w, r.h);
    for (int j = 0; j < r.h; ++j) {
        const std::uint8_t* src = img.row(r.y + j) + r.x;
        std::uint8_t* dst = out.row(j);
        std::copy(src, src + r.w, dst);
    }
    return out;
}

RotateMap make_rotate_map(int width, int height, double angle_deg) {
    RotateMap m;
    m.src_w = width;
    m.src_h = height;
    const double rad = angle_deg * kPi / 180.0;
    m.cos_t = std::cos(rad);
    m.sin_t = std::sin(rad);
    m.cos_q16 = to_fixed(m.cos_t);
    m.sin_q16 = to_fixed(m.sin_t);

    const double ac = std::fabs(m.cos_t);
    const double as = std::fabs(m.sin_t);
    // Small epsilon keeps exact cases (angle 0) from gaining a row of slack.
    int out_w = static_cast<int>(std::ceil(width * ac + height * as - 1e-9));
    int out_h = static_cast<int>(std::ceil(width * as + height * ac - 1e-9));
    // Grow by whole pixel pairs so the canvas center sits an integer offset
    // from the source center; a centered pixel then maps back exactly.
    if ((out_w - width) % 2 != 0) ++out_w;
    if ((out_h - height) % 2 != 0) ++out_h;
    m.out_w = out_w;
    m.out_h = out_h;
    return m;
}

SourceCoord map_source_float(const RotateMap& m, int ox, int oy) {
    const double dx = ox - (m.out_w - 1) / 2.0;
    const double dy = oy - (m.out_h - 1) / 2.0;
    const double sx = m.cos_t * dx - m.sin_t * dy + (m.src_w - 1) / 2.0;
    const double sy = m.sin_t * dx + m.cos_t * dy + (m.src_h - 1) / 2.0;
    return {static_cast<int>(std::floor(sx + 0.5)),
            static_cast<int>(std::floor(sy + 0.5))};
}

SourceCoord map_source_fixed(const RotateMap& m, int ox, int oy) {
    // Doubled offsets keep the half-pixel centers in integers.
    const std::int64_t dx2 = 2 * static_cast<std::int64_t>(ox) - (m.out_w - 1);
    const std::int64_t dy2 = 2 * static_cast<std::int64_t>(oy) - (m.out_h - 1);
    const std::int64_t cx_q = static_cast<std::int64_t>(m.src_w - 1) << (kFixedShift - 1);
    const std::int64_t cy_q = static_cast<std::int64_t>(m.src_h - 1) << (kFixedShift - 1);
    const std::int64_t sx_q = ((m.cos_q16 * dx2 - m.sin_q16 * dy2) >> 1) + cx_q;
    const std::int64_t sy_q = ((m.sin_q16 * dx2 + m.cos_q16 * dy2) >> 1) + cy_q;
    return {fixed_round(sx_q), fixed_round(sy_q)};
}

GrayImage rotate(const GrayImage& img, double angle_deg, std::uint8_t fill,
                 ArithmeticMode mode) {
    if (!(std::fabs(angle_deg) <= 45.0)) {
        throw DomainError("rotate angle " + std::to_string(angle_deg) +
                          " outside [-45, 45]");
    }
    const RotateMap m = make_rotate_map(img.width(), img.height(), angle_deg);
    GrayImage out(m.out_w, m.out_h, fill);

    if (mode == ArithmeticMode::Integer) {
        const std::int64_t cx_q = static_cast<std::int64_t>(m.src_w - 1) << (kFixedShift - 1);
        const std::int64_t cy_q = static_cast<std::int64_t>(m.src_h - 1) << (kFixedShift - 1);
        for (int oy = 0; oy < m.out_h; ++oy) {
            const std::int64_t dy2 = 2 * static_cast<std::int64_t>(oy) - (m.out_h - 1);
            const std::int64_t dx2_0 = -static_cast<std::int64_t>(m.out_w - 1);
            // Accumulate in pre-shift units; per-column step is exactly 2*cos/2*sin.
            std::int64_t ax = m.cos_q16 * dx2_0 - m.sin_q16 * dy2;
            std::int64_t ay = m.sin_q16 * dx2_0 + m.cos_q16 * dy2;
            std::uint8_t* dst = out.row(oy);
            for (int ox = 0; ox < m.out_w; ++ox) {
                const int sx = fixed_round((ax >> 1) + cx_q);
                const int sy = fixed_round((ay >> 1) + cy_q);
                if (sx >= 0 && sx < m.src_w && sy >= 0 && sy < m.src_h) {
                    dst[ox] = img.at(sx, sy);
                }
                ax += 2 * m.cos_q16;
                ay += 2 * m.sin_q16;
            }
        }
    } else {
        for (int oy = 0; oy < m.out_h; ++oy) {
            std::uint8_t* dst = out.row(oy);
            for (int ox = 0; ox < m.out_w; ++ox) {
                const SourceCoord s = map_source_float(m, ox, oy);
                if (s.x >= 0 && s.x < m.src_w && s.y >= 0 && s.y < m.src_h) {
                    dst[ox] = img.at(s.x, s.y);
                }
            }
        }
    }
    return out;
}

} // namespace cardprep
