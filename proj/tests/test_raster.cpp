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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "cardprep/error.hpp"
#include "cardprep/pgm.hpp"
#include "cardprep/raster.hpp"
#include "cardprep/skew.hpp"
#include "helpers.hpp"

using namespace cardprep;
using cardprep::testing::image_from;
using cardprep::testing::random_image;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header,
                                   std::initializer_list<std::uint8_t> data) {
    std::vector<std::uint8_t> v(header.begin(), header.end());
    v.insert(v.end(), data);
    return v;
}

} // namespace

TEST_CASE("load_pgm parses a minimal file") {
    const auto img = load_pgm(bytes_of("P5\n2 1\n255\n", {0x00, 0xFF}));
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(img.at(0, 0) == 0);
    CHECK(img.at(1, 0) == 255);
}

TEST_CASE("load_pgm tolerates comment lines and round-trips") {
    const auto img = load_pgm(bytes_of("P5\n# c\n1 1\n255\n", {0x7F}));
    CHECK(img.width() == 1);
    CHECK(img.height() == 1);
    CHECK(img.at(0, 0) == 127);
    CHECK(load_pgm(save_pgm(img)) == img);
}

TEST_CASE("load_pgm reports truncation with expected vs actual counts") {
    try {
        load_pgm(bytes_of("P5\n2 2\n255\n", {1, 2, 3}));
        FAIL("expected LengthError");
    } catch (const LengthError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("4") != std::string::npos);
        CHECK(msg.find("3") != std::string::npos);
    }
}

TEST_CASE("load_pgm names the offending header token") {
    try {
        load_pgm(bytes_of("P4\n2 2\n255\n", {1, 2, 3, 4}));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("P4") != std::string::npos);
    }
    CHECK_THROWS_AS(load_pgm(bytes_of("P5\nab 2\n255\n", {1, 2})), ParseError);
    CHECK_THROWS_AS(load_pgm(bytes_of("P5\n2 2\n999\n", {1, 2, 3, 4})), ParseError);
    CHECK_THROWS_AS(load_pgm(bytes_of("P5\n2\n", {})), ParseError);
}

TEST_CASE("save_pgm round-trips") {
    SUBCASE("1x1 zero") {
        const GrayImage img(1, 1, 0);
        CHECK(load_pgm(save_pgm(img)) == img);
    }
    SUBCASE("3x2 distinct values") {
        const GrayImage img(3, 2, {10, 20, 30, 40, 50, 60});
        const auto bytes = save_pgm(img);
        CHECK(load_pgm(bytes) == img);
    }
    SUBCASE("2048x1536 all-white payload size") {
        const GrayImage img(2048, 1536, 255);
        const auto bytes = save_pgm(img);
        const std::string header = "P5\n2048 1536\n255\n";
        CHECK(bytes.size() == header.size() + 3145728);
        CHECK(load_pgm(bytes) == img);
    }
}

TEST_CASE("pgm round-trip is bit-exact on random images") {
    std::mt19937 rng(20260808);
    for (int i = 0; i < 40; ++i) {
        const GrayImage img = random_image(rng);
        CHECK(load_pgm(save_pgm(img)) == img);
    }
}

TEST_CASE("crop identity and hand-indexed interior") {
    const GrayImage img(4, 4, {0,  1,  2,  3,
                               4,  5,  6,  7,
                               8,  9,  10, 11,
                               12, 13, 14, 15});
    CHECK(crop(img, {0, 0, 4, 4}) == img);

    const GrayImage inner = crop(img, {1, 1, 2, 2});
    CHECK(inner == GrayImage(2, 2, {5, 6, 9, 10}));
}

TEST_CASE("crop rejects out-of-bounds rects") {
    const GrayImage img(4, 4, 0);
    CHECK_THROWS_AS(crop(img, {2, 0, 3, 2}), BoundsError);
    CHECK_THROWS_AS(crop(img, {-1, 0, 2, 2}), BoundsError);
    CHECK_THROWS_AS(crop(img, {0, 0, 0, 1}), BoundsError);
}

TEST_CASE("crop composition equals one crop of the composed rect") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        const GrayImage img = random_image(rng, 32);
        if (img.width() < 4 || img.height() < 3) continue;
        const Rect r1{1, 1, img.width() - 2, img.height() - 2};
        const Rect r2{1, 0, r1.w - 1, r1.h};
        const Rect composed{r1.x + r2.x, r1.y + r2.y, r2.w, r2.h};
        CHECK(crop(crop(img, r1), r2) == crop(img, composed));
    }
}

TEST_CASE("rotate by zero is the identity") {
    std::mt19937 rng(11);
    const GrayImage img = random_image(rng, 24);
    const GrayImage out = rotate(img, 0.0, 255);
    CHECK(out == img);
}

TEST_CASE("rotate rejects angles past 45 degrees") {
    const GrayImage img(4, 4, 0);
    CHECK_THROWS_AS(rotate(img, 45.01, 255), DomainError);
    CHECK_THROWS_AS(rotate(img, -90.0, 255), DomainError);
}

TEST_CASE("a centered black pixel survives any rotation at the center") {
    GrayImage img(9, 7, 255);
    img.set(4, 3, 0);
    for (double angle : {-45.0, -17.2, -5.71, 3.0, 12.34, 30.0, 45.0}) {
        for (ArithmeticMode mode : {ArithmeticMode::Float, ArithmeticMode::Integer}) {
            const GrayImage out = rotate(img, angle, 255, mode);
            CHECK(out.width() % 2 == 1);
            CHECK(out.height() % 2 == 1);
            CHECK(out.at(out.width() / 2, out.height() / 2) == 0);
        }
    }
}

TEST_CASE("rotating a thin line and re-measuring recovers the angle") {
    GrayImage line(100, 1, 0); // horizontal black line
    for (double angle : {5.71, -5.71}) {
        const GrayImage out = rotate(line, angle, 255);
        const BottomProfile profile = bottom_profile(out, 250, 1);
        const auto est = estimate_skew(profile);
        REQUIRE(est.has_value());
        CHECK(!est->low_confidence);
        CHECK(std::abs(est->angle - angle) < 0.5);
        CHECK(std::abs(std::abs(est->angle) - 5.71) < 0.5);
    }
}

TEST_CASE("rotate there-and-back differs only near content edges") {
    GrayImage img(41, 31, 255);
    for (int y = 10; y < 20; ++y) {
        for (int x = 8; x < 30; ++x) {
            img.set(x, y, 40);
        }
    }
    const double theta = 9.5;
    const GrayImage once = rotate(img, theta, 255);
    const GrayImage back = rotate(once, -theta, 255);
    const int off_x = (back.width() - img.width()) / 2;
    const int off_y = (back.height() - img.height()) / 2;
    const GrayImage restored = crop(back, {off_x, off_y, img.width(), img.height()});

    auto near_edge = [&](int x, int y) {
        for (int dy = -2; dy <= 2; ++dy) {
            for (int dx = -2; dx <= 2; ++dx) {
                const int nx = x + dx;
                const int ny = y + dy;
                if (nx < 0 || nx >= img.width() || ny < 0 || ny >= img.height()) {
                    return true; // canvas border
                }
                if (img.at(nx, ny) != img.at(x, y)) {
                    return true;
                }
            }
        }
        return false;
    };
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (restored.at(x, y) != img.at(x, y)) {
                INFO("diff at ", x, ",", y);
                CHECK(near_edge(x, y));
            }
        }
    }
}

TEST_CASE("rotate there-and-back preserves solid images exactly") {
    for (int v : {0, 128, 255}) {
        GrayImage img(21, 13, static_cast<std::uint8_t>(v));
        const GrayImage once = rotate(img, 14.0, static_cast<std::uint8_t>(v));
        const GrayImage back = rotate(once, -14.0, static_cast<std::uint8_t>(v));
        const int off_x = (back.width() - img.width()) / 2;
        const int off_y = (back.height() - img.height()) / 2;
        CHECK(crop(back, {off_x, off_y, img.width(), img.height()}) == img);
    }
}

TEST_CASE("fixed-point rotation mapping stays within 1 pixel of float") {
    std::mt19937 rng(99);
    for (int i = 0; i < 20; ++i) {
        const int w = 3 + static_cast<int>(rng() % 120);
        const int h = 3 + static_cast<int>(rng() % 120);
        const double angle = -45.0 + (rng() % 9001) / 100.0;
        const RotateMap m = make_rotate_map(w, h, angle);
        for (int oy = 0; oy < m.out_h; ++oy) {
            for (int ox = 0; ox < m.out_w; ++ox) {
                const SourceCoord a = map_source_float(m, ox, oy);
                const SourceCoord b = map_source_fixed(m, ox, oy);
                CHECK(std::abs(a.x - b.x) <= 1);
                CHECK(std::abs(a.y - b.y) <= 1);
            }
        }
    }
}

TEST_CASE("integer-mode rotation produces a same-size canvas") {
    std::mt19937 rng(5);
    const GrayImage img = random_image(rng, 40);
    const GrayImage a = rotate(img, 17.0, 255, ArithmeticMode::Float);
    const GrayImage b = rotate(img, 17.0, 255, ArithmeticMode::Integer);
    CHECK(a.width() == b.width());
    CHECK(a.height() == b.height());
}

TEST_CASE("integer-mode rotation samples exactly map_source_fixed") {
    std::mt19937 rng(31);
    for (double angle : {-31.0, -4.5, 9.0, 44.0}) {
        const GrayImage img = random_image(rng, 30);
        const GrayImage out = rotate(img, angle, 77, ArithmeticMode::Integer);
        const RotateMap m = make_rotate_map(img.width(), img.height(), angle);
        REQUIRE(out.width() == m.out_w);
        REQUIRE(out.height() == m.out_h);
        for (int oy = 0; oy < m.out_h; ++oy) {
            for (int ox = 0; ox < m.out_w; ++ox) {
                const SourceCoord s = map_source_fixed(m, ox, oy);
                const std::uint8_t want =
                    (s.x >= 0 && s.x < img.width() && s.y >= 0 && s.y < img.height())
                        ? img.at(s.x, s.y)
                        : 77;
                CHECK(out.at(ox, oy) == want);
            }
        }
    }
}

TEST_CASE("mutated pgm bytes either parse or throw a typed error") {
    std::mt19937 rng(1234);
    const GrayImage img(6, 4, 100);
    const std::vector<std::uint8_t> good = save_pgm(img);
    for (int i = 0; i < 400; ++i) {
        std::vector<std::uint8_t> bytes = good;
        const int mutations = 1 + static_cast<int>(rng() % 4);
        for (int m = 0; m < mutations; ++m) {
            switch (rng() % 3) {
            case 0: // flip a byte
                bytes[rng() % bytes.size()] = static_cast<std::uint8_t>(rng() % 256);
                break;
            case 1: // truncate
                bytes.resize(1 + rng() % bytes.size());
                break;
            default: // append junk
                bytes.push_back(static_cast<std::uint8_t>(rng() % 256));
                break;
            }
        }
        try {
            (void)load_pgm(bytes);
        } catch (const Error&) {
            // any typed error is fine; crashing or std exceptions are not
        }
    }
}

TEST_CASE("load_pgm keeps raw bytes for maxval below 255") {
    const auto img = load_pgm(bytes_of("P5\n2 1\n100\n", {0x10, 0x64}));
    CHECK(img.at(0, 0) == 0x10);
    CHECK(img.at(1, 0) == 0x64);
    // saving re-encodes at maxval 255 and still round-trips
    CHECK(load_pgm(save_pgm(img)) == img);
}
