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

#ifndef CARDPREP_FIXED_HPP
#define CARDPREP_FIXED_HPP

#include <cstdint>

namespace cardprep {

/// Selects between the standard floating-point code paths and the
/// integer-only (Q16.16 / LUT) ones. Both must agree within the documented
/// tolerances; the integer paths exist for FPU-less targets.
enum class ArithmeticMode {
    Float,
    Integer,
};

inline constexpr int kFixedShift = 16;
inline constexpr std::int64_t kFixedOne = std::int64_t{1} << kFixedShift;

/// Nearest integer of a Q16.16 value (round half up, arithmetic shift).
inline int fixed_round(std::int64_t q16) {
    return static_cast<int>((q16 + (kFixedOne >> 1)) >> kFixedShift);
}

inline std::int64_t to_fixed(double v) {
    return static_cast<std::int64_t>(v * static_cast<double>(kFixedOne) +
                                     (v >= 0 ? 0.5 : -0.5));
}

inline double from_fixed(std::int64_t q16) {
    return static_cast<double>(q16) / static_cast<double>(kFixedOne);
}

/// atan2 in degrees via std::atan2. dx must be >= 0 in all callers here.
double atan_deg_std(std::int64_t dy, std::int64_t dx);

/// Integer-only atan2 in degrees: 1024-entry LUT over [0, 1] with linear
/// interpolation, plus octant reduction. Agrees with atan_deg_std within
/// 0.1 degrees. (0, 0) maps to 0.
double atan_deg_lut(std::int64_t dy, std::int64_t dx);

} // namespace cardprep

#endif // CARDPREP_FIXED_HPP
