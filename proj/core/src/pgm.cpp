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

#include "cardprep/pgm.hpp"

#include <cctype>
#include <fstream>

#include "cardprep/error.hpp"

namespace cardprep {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

class TokenReader {
public:
    explicit TokenReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Skips whitespace and '#'-to-end-of-line comments, then reads one token.
    std::string next(const char* what) {
        for (;;) {
            while (pos_ < bytes_.size() && is_pnm_space(bytes_[pos_])) ++pos_;
            if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        if (pos_ >= bytes_.size()) {
            throw ParseError(std::string("pgm: missing ") + what);
        }
        std::string tok;
        while (pos_ < bytes_.size() && !is_pnm_space(bytes_[pos_]) &&
               bytes_[pos_] != '#') {
            tok.push_back(static_cast<char>(bytes_[pos_]));
            ++pos_;
        }
        return tok;
    }

    // The header ends with exactly one whitespace byte before the raster.
    void consume_raster_separator() {
        if (pos_ >= bytes_.size() || !is_pnm_space(bytes_[pos_])) {
            throw ParseError("pgm: missing whitespace between maxval and pixel data");
        }
        ++pos_;
    }

    std::size_t pos() const { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

int parse_header_int(const std::string& tok, const char* what, int min, int max) {
    if (tok.empty()) {
        throw ParseError(std::string("pgm: empty ") + what + " token");
    }
    long value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("pgm: invalid ") + what + " token \"" +
                             tok + "\"");
        }
        value = value * 10 + (c - '0');
        if (value > 1000000000L) {
            throw ParseError(std::string("pgm: ") + what + " token \"" + tok +
                             "\" out of range");
        }
    }
    if (value < min || value > max) {
        throw ParseError(std::string("pgm: ") + what + " token \"" + tok +
                         "\" out of range [" + std::to_string(min) + ", " +
                         std::to_string(max) + "]");
    }
    return static_cast<int>(value);
}

} // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
    TokenReader rd(bytes);
    const std::string magic = rd.next("magic");
    if (magic != "P5") {
        throw ParseError("pgm: expected magic \"P5\", got \"" + magic + "\"");
    }
    // Component pixel coordinates are 16-bit; dimensions beyond that are
    // far outside the supported capture range anyway.
    const int width = parse_header_int(rd.next("width"), "width", 1, 65535);
    const int height = parse_header_int(rd.next("height"), "height", 1, 65535);
    parse_header_int(rd.next("maxval"), "maxval", 1, 255);
    rd.consume_raster_separator();

    const std::size_t expected = static_cast<std::size_t>(width) * height;
    const std::size_t available = bytes.size() - rd.pos();
    if (available < expected) {
        throw LengthError("pgm: pixel data truncated: expected " +
                          std::to_string(expected) + " bytes, got " +
                          std::to_string(available));
    }
    std::vector<std::uint8_t> pixels(bytes.begin() + rd.pos(),
                                     bytes.begin() + rd.pos() + expected);
    return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                               std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + img.pixel_count());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

GrayImage load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open \"" + path + "\" for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("failed reading \"" + path + "\"");
    }
    return load_pgm(bytes);
}

void save_pgm_file(const GrayImage& img, const std::string& path) {
    const std::vector<std::uint8_t> bytes = save_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("failed writing \"" + path + "\"");
    }
}

} // namespace cardprep
