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

#ifndef CARDPREP_MEMTRACK_HPP
#define CARDPREP_MEMTRACK_HPP

#include <cstdint>

namespace cardprep::memtrack {

/// Bytes currently live through the replaced global operator new/delete.
/// In-process high-water-mark instrumentation, not OS sampling, so numbers
/// are deterministic.
std::uint64_t current_bytes();

/// Largest value current_bytes() has reached since the last reset.
std::uint64_t high_water_bytes();

/// Restart the high-water mark at the current level.
void reset_high_water();

} // namespace cardprep::memtrack

#endif // CARDPREP_MEMTRACK_HPP
