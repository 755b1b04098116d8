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

#include "cardprep/background.hpp"
#include "cardprep/components.hpp"
#include "cardprep/config.hpp"
#include "cardprep/synth.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cardprep;
using cardprep::testing::brute_force_components;
using cardprep::testing::image_from;
using cardprep::testing::random_binary_image;

namespace {

BlockMask open_mask(const GrayImage& img) {
    return BlockMask::all_foreground(img.width(), img.height(), 8);
}

ConnectedComponent whole_image_component(const GrayImage& img, int fg_threshold) {
    auto ccs = extract_components(img, open_mask(img), fg_threshold);
    REQUIRE(ccs.size() == 1);
    return ccs.front();
}

} // namespace

TEST_CASE("two separated squares give two components") {
    const GrayImage img = image_from({
        "###.###",
        "###.###",
        "###.###",
    });
    const auto ccs = extract_components(img, open_mask(img), 250);
    REQUIRE(ccs.size() == 2);
    CHECK(ccs[0].bbox == Rect{0, 0, 3, 3});
    CHECK(ccs[1].bbox == Rect{4, 0, 3, 3});
    CHECK(ccs[0].pixel_count() == 9);
    CHECK(ccs[1].pixel_count() == 9);
}

TEST_CASE("diagonal contact does not join components under 4-connectivity") {
    const GrayImage img = image_from({
        "#.",
        ".#",
    });
    const auto ccs = extract_components(img, open_mask(img), 250);
    CHECK(ccs.size() == 2);
}

TEST_CASE("a single dark pixel is one 1x1 component") {
    GrayImage img(5, 5, 255);
    img.set(2, 3, 12);
    const auto ccs = extract_components(img, open_mask(img), 250);
    REQUIRE(ccs.size() == 1);
    CHECK(ccs[0].bbox == Rect{2, 3, 1, 1});
    CHECK(ccs[0].pixel_count() == 1);
}

TEST_CASE("components are ordered by (y, x, size) with stable ids") {
    const GrayImage img = image_from({
        ".##..#.",
        ".......",
        "#......",
    });
    const auto ccs = extract_components(img, open_mask(img), 250);
    REQUIRE(ccs.size() == 3);
    CHECK(ccs[0].bbox.y == 0);
    CHECK(ccs[0].bbox.x == 1);
    CHECK(ccs[1].bbox == Rect{5, 0, 1, 1});
    CHECK(ccs[2].bbox == Rect{0, 2, 1, 1});
    for (std::size_t i = 0; i < ccs.size(); ++i) {
        CHECK(ccs[i].id == static_cast<int>(i));
    }
}

TEST_CASE("pixels inside background blocks are never foreground") {
    GrayImage img(16, 8, 255);
    img.set(2, 2, 0);  // block (0,0)
    img.set(12, 2, 0); // block (1,0)
    BlockMask mask(2, 1, 8, BlockLabel::Foreground);
    mask.set(1, 0, BlockLabel::Background);
    const auto ccs = extract_components(img, mask, 250);
    REQUIRE(ccs.size() == 1);
    CHECK(ccs[0].bbox == Rect{2, 2, 1, 1});
}

TEST_CASE("region growing matches the brute-force oracle") {
    std::mt19937 rng(20260101);
    for (int i = 0; i < 120; ++i) {
        const GrayImage img = random_binary_image(rng, 48);
        const auto got = extract_components(img, open_mask(img), 250);
        const auto expected = brute_force_components(img, 250);
        REQUIRE(got.size() == expected.size());

        // Same partition: compare pixel sets of bbox-sorted components.
        auto sorted_expected = expected;
        std::sort(sorted_expected.begin(), sorted_expected.end(),
                  [](const auto& a, const auto& b) {
                      if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
                      if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
                      return a.pixels.size() < b.pixels.size();
                  });
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k].bbox == sorted_expected[k].bbox);
            REQUIRE(got[k].pixels.size() == sorted_expected[k].pixels.size());
            for (std::size_t p = 0; p < got[k].pixels.size(); ++p) {
                CHECK(got[k].pixels[p].x == sorted_expected[k].pixels[p].second);
                CHECK(got[k].pixels[p].y == sorted_expected[k].pixels[p].first);
            }
        }
    }
}

TEST_CASE("features of a solid black box") {
    const GrayImage img(10, 5, 0);
    const auto cc = whole_image_component(img, 250);
    const CcFeatures f = compute_features(img, cc, {250, 128});
    CHECK(f.width == 10);
    CHECK(f.height == 5);
    CHECK(f.aspect() == doctest::Approx(2.0));
    CHECK(f.fg_bg_ratio() == doctest::Approx(100.0));
    CHECK(f.black_density() == doctest::Approx(100.0));
    CHECK(f.gray_density() == doctest::Approx(0.0));
    CHECK(f.h_segments == 1);
    CHECK(f.cuts == 1);
    CHECK(f.v_segments == 1);
}

TEST_CASE("a three-run middle row yields three segments and three cuts") {
    // Middle row pattern: B W B B W W B (3 foreground runs, 6 transitions
    // once the scan closes at the borders).
    const GrayImage img = image_from({
        "#.##..#",
        "#.##..#",
        "#.##..#",
    });
    auto ccs = extract_components(img, open_mask(img), 250);
    REQUIRE(ccs.size() == 3);
    ConnectedComponent merged;
    merged.bbox = {0, 0, 7, 3};
    const CcFeatures f = compute_features(img, merged, {250, 128});
    CHECK(f.h_segments == 3);
    CHECK(f.cuts == 3);
}

TEST_CASE("features of a single pixel component") {
    GrayImage img(3, 3, 255);
    img.set(1, 1, 0);
    const auto cc = whole_image_component(img, 250);
    const CcFeatures f = compute_features(img, cc, {250, 128});
    CHECK(f.width == 1);
    CHECK(f.height == 1);
    CHECK(f.aspect() == doctest::Approx(1.0));
    CHECK(f.fg_bg_ratio() == doctest::Approx(100.0));
}

TEST_CASE("middle-column runs feed v_segments") {
    const GrayImage img = image_from({
        "..#..",
        ".....",
        "..#..",
        "..#..",
        ".....",
    });
    ConnectedComponent cc;
    cc.bbox = {0, 0, 5, 5};
    const CcFeatures f = compute_features(img, cc, {250, 128});
    CHECK(f.v_segments == 2);
    CHECK(f.h_segments == 1); // middle row crosses the single mid pixel
}

TEST_CASE("gray and black densities split the intensity band") {
    const GrayImage img = image_from({
        "#g.",
        "#g.",
    });
    ConnectedComponent cc;
    cc.bbox = {0, 0, 3, 2};
    const CcFeatures f = compute_features(img, cc, {250, 128});
    CHECK(f.black_count == 2);
    CHECK(f.gray_count == 2);
    CHECK(f.black_density() == doctest::Approx(100.0 / 3));
    CHECK(f.gray_density() == doctest::Approx(100.0 / 3));
}

TEST_CASE("classifier rule cascade") {
    ClassifierParams p; // published bounds; concrete sizes below
    p.min_area = 10;
    p.line_thickness = 3;
    p.max_char_height = 96;

    CcFeatures text;
    text.width = 50;
    text.height = 10;
    text.bbox_area = 500;
    text.member_count = 100; // ratio 20%
    text.has_clear_column = true;
    SUBCASE("typical text features pass") {
        CHECK(classify_component(text, p) == ComponentLabel::Text);
    }
    SUBCASE("aspect above r_max is graphics") {
        CcFeatures f = text;
        f.width = 400;
        f.bbox_area = 4000;
        f.member_count = 800; // keep ratio inside
        CHECK(classify_component(f, p) == ComponentLabel::Graphics);
    }
    SUBCASE("fill ratio above ra_max is graphics") {
        CcFeatures f = text;
        f.member_count = 485; // 97%
        CHECK(classify_component(f, p) == ComponentLabel::Graphics);
    }
    SUBCASE("tiny components are graphics") {
        CcFeatures f = text;
        f.member_count = 9;
        CHECK(classify_component(f, p) == ComponentLabel::Graphics);
    }
    SUBCASE("vertical line test fires independently of the aspect gate") {
        ClassifierParams loose = p;
        loose.r_min_milli = 1; // aspect gate effectively open at the bottom
        CcFeatures f;
        f.width = 2;
        f.height = 100;
        f.bbox_area = 200;
        f.member_count = 60;
        CHECK(classify_component(f, loose) == ComponentLabel::Graphics);
    }
    SUBCASE("over-tall blob without a clear path is a logo") {
        ClassifierParams loose = p;
        loose.r_min_milli = 500; // let aspect 1.0 through
        CcFeatures f;
        f.width = 150;
        f.height = 150;
        f.bbox_area = 150 * 150;
        f.member_count = 9000; // 40%
        f.has_clear_column = false;
        f.has_clear_row = false;
        CHECK(classify_component(f, loose) == ComponentLabel::Graphics);
        f.has_clear_row = true;
        CHECK(classify_component(f, loose) == ComponentLabel::Text);
    }
}

TEST_CASE("separation erases graphics and keeps text intact") {
    // A word-like blob of glyph boxes plus a long thin rule.
    GrayImage img(120, 40, 255);
    for (int g = 0; g < 5; ++g) {
        const int x0 = 6 + g * 14;
        for (int y = 8; y < 22; ++y) {
            for (int x = x0; x < x0 + 9; ++x) {
                img.set(x, y, 30);
            }
        }
    }
    for (int y = 22; y < 24; ++y) { // gray bar joining the boxes
        for (int x = 6; x < 6 + 4 * 14 + 9; ++x) {
            img.set(x, y, 150);
        }
    }
    for (int x = 4; x < 116; ++x) { // rule
        img.set(x, 34, 40);
    }

    ClassifierParams p;
    p.min_area = 8;
    p.line_thickness = 3;
    p.max_char_height = 30;
    const auto result =
        separate_text_graphics(img, open_mask(img), p, {250, 128});
    REQUIRE(result.components.size() == 2);

    const auto& word = result.components[0];
    const auto& rule = result.components[1];
    CHECK(word.label == ComponentLabel::Text);
    CHECK(rule.label == ComponentLabel::Graphics);

    // the rule is gone from the text image, the word untouched
    CHECK(result.text_image.at(10, 34) == 255);
    for (const PixelCoord& px : word.cc.pixels) {
        CHECK(result.text_image.at(px.x, px.y) == img.at(px.x, px.y));
    }
}

TEST_CASE("an all-white image separates into nothing") {
    const GrayImage img(64, 64, 255);
    const auto result =
        separate_text_graphics(img, open_mask(img), ClassifierParams{}, {250, 128});
    CHECK(result.components.empty());
    CHECK(result.text_image == img);
}

TEST_CASE("generator cards separate into k text lines and one logo") {
    SynthCardSpec spec;
    spec.n_text_lines = 3;
    spec.include_logo = true;
    spec.include_lines = false;
    spec.seed = 77;
    const SynthCard card = generate_card(spec);

    const PipelineConfig cfg;
    const auto [suppressed, mask] = eliminate_background(
        card.image, threshold_params(cfg),
        resolved_block_size(cfg, card.image.width(), card.image.height()));
    const auto result = separate_text_graphics(
        suppressed, mask,
        resolved_classifier(cfg, card.image.width(), card.image.height()),
        feature_thresholds(cfg));

    int text = 0, graphics = 0;
    for (const auto& entry : result.components) {
        (entry.label == ComponentLabel::Text ? text : graphics)++;
    }
    CHECK(text == 3);
    CHECK(graphics == 1);
}

TEST_CASE("separation is deterministic and order-independent") {
    std::mt19937 rng(314);
    const GrayImage img = random_binary_image(rng, 40);
    ClassifierParams p;
    p.min_area = 2;
    const auto a = separate_text_graphics(img, open_mask(img), p, {250, 128});
    const auto b = separate_text_graphics(img, open_mask(img), p, {250, 128});
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].label == b.components[i].label);
        CHECK(a.components[i].cc.bbox == b.components[i].cc.bbox);
    }
    CHECK(a.text_image == b.text_image);
}

TEST_CASE("every foreground pixel lands in exactly one component") {
    std::mt19937 rng(2718);
    for (int i = 0; i < 30; ++i) {
        const GrayImage img = random_binary_image(rng, 40);
        const auto ccs = extract_components(img, open_mask(img), 250);
        std::vector<int> owner(static_cast<std::size_t>(img.width()) * img.height(), 0);
        std::int64_t member_total = 0;
        for (const auto& cc : ccs) {
            member_total += cc.pixel_count();
            for (const PixelCoord& px : cc.pixels) {
                owner[static_cast<std::size_t>(px.y) * img.width() + px.x]++;
                CHECK(cc.bbox.contains(px.x, px.y));
            }
        }
        std::int64_t fg_total = 0;
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                const bool fg = img.at(x, y) < 250;
                if (fg) ++fg_total;
                CHECK(owner[static_cast<std::size_t>(y) * img.width() + x] ==
                      (fg ? 1 : 0));
            }
        }
        CHECK(member_total == fg_total);
    }
}
