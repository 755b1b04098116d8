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

#ifndef CARDPREP_PGM_HPP
#define CARDPREP_PGM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cardprep/raster.hpp"

namespace cardprep {

/// Parse a binary PGM (P5, maxval <= 255). Comment lines starting with '#'
/// are tolerated between header tokens. Throws ParseError on a malformed
/// header (naming the offending token) and LengthError on truncated pixel
/// data (stating expected vs actual byte count).
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Encode as binary PGM with maxval 255. load_pgm(save_pgm(img)) == img.
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

/// File wrappers; throw IoError when the path cannot be read or written.
GrayImage load_pgm_file(const std::string& path);
void save_pgm_file(const GrayImage& img, const std::string& path);

} // namespace cardprep

#endif // CARDPREP_PGM_HPP
