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

#include "cardprep/fixed.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace cardprep {

namespace {

constexpr int kLutSize = 1024;
constexpr double kRadToDeg = 57.29577951308232;

// lut[i] = atan(i / 1024) in degrees, Q16.16. Filled once at startup; lookups
// after that are integer-only.
const std::array<std::int64_t, kLutSize + 1>& atan_lut() {
    static const std::array<std::int64_t, kLutSize + 1> table = [] {
        std::array<std::int64_t, kLutSize + 1> t{};
        for (int i = 0; i <= kLutSize; ++i) {
            const double deg = std::atan(static_cast<double>(i) / kLutSize) * kRadToDeg;
            t[i] = to_fixed(deg);
        }
        return t;
    }();
    return table;
}

// atan(n/d) in Q16.16 degrees for 0 <= n <= d, d > 0.
std::int64_t atan_ratio_q16(std::int64_t n, std::int64_t d) {
    const auto& lut = atan_lut();
    // t in [0, 1] scaled to LUT index space with 6 fractional bits.
    const std::int64_t t = (n << 16) / d;       // Q16 in [0, 65536]
    const std::int64_t idx = t >> 6;            // [0, 1024]
    const std::int64_t frac = t & 63;
    if (idx >= kLutSize) {
        return lut[kLutSize];
    }
    return lut[idx] + (((lut[idx + 1] - lut[idx]) * frac) >> 6);
}

} // namespace

double atan_deg_std(std::int64_t dy, std::int64_t dx) {
    if (dy == 0 && dx == 0) {
        return 0.0;
    }
    return std::atan2(static_cast<double>(dy), static_cast<double>(dx)) * kRadToDeg;
}

double atan_deg_lut(std::int64_t dy, std::int64_t dx) {
    if (dy == 0 && dx == 0) {
        return 0.0;
    }
    const std::int64_t ay = std::llabs(dy);
    const std::int64_t ax = std::llabs(dx);
    std::int64_t deg_q16;
    if (ay <= ax) {
        deg_q16 = atan_ratio_q16(ay, ax);
    } else {
        deg_q16 = to_fixed(90.0) - atan_ratio_q16(ax, ay);
    }
    if (dx < 0) {
        deg_q16 = to_fixed(180.0) - deg_q16;
    }
    if (dy < 0) {
        deg_q16 = -deg_q16;
    }
    return from_fixed(deg_q16);
}

} // namespace cardprep
