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

#include "cardprep/components.hpp"

#include <algorithm>
#include <string>

#include "cardprep/error.hpp"

namespace cardprep {

void ClassifierParams::validate() const {
    if (r_min_milli >= r_max_milli) {
        throw ConfigError("classifier requires r_min < r_max");
    }
    if (ra_min_milli >= ra_max_milli) {
        throw ConfigError("classifier requires ra_min < ra_max");
    }
}

std::vector<ConnectedComponent> extract_components(const GrayImage& img,
                                                   const BlockMask& mask,
                                                   int fg_threshold) {
    const int w = img.width();
    const int h = img.height();
    const int expected_cols = (w + mask.block_size() - 1) / mask.block_size();
    const int expected_rows = (h + mask.block_size() - 1) / mask.block_size();
    if (mask.cols() != expected_cols || mask.rows() != expected_rows) {
        throw DomainError("block mask grid " + std::to_string(mask.cols()) + "x" +
                          std::to_string(mask.rows()) + " does not cover a " +
                          std::to_string(w) + "x" + std::to_string(h) + " image");
    }

    auto is_fg = [&](int x, int y) {
        return img.at(x, y) < fg_threshold &&
               mask.at_pixel(x, y) == BlockLabel::Foreground;
    };

    std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<ConnectedComponent> out;
    std::vector<std::int32_t> stack;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (label[idx] >= 0 || !is_fg(x, y)) {
                continue;
            }
            const std::int32_t id = static_cast<std::int32_t>(out.size());
            ConnectedComponent cc;
            int min_x = x, max_x = x, min_y = y, max_y = y;
            label[idx] = id;
            stack.push_back(static_cast<std::int32_t>(idx));
            while (!stack.empty()) {
                const std::int32_t cur = stack.back();
                stack.pop_back();
                const int cx = cur % w;
                const int cy = cur / w;
                cc.pixels.push_back({static_cast<std::uint16_t>(cx),
                                     static_cast<std::uint16_t>(cy)});
                min_x = std::min(min_x, cx);
                max_x = std::max(max_x, cx);
                min_y = std::min(min_y, cy);
                max_y = std::max(max_y, cy);
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) {
                        continue;
                    }
                    const std::size_t nidx =
                        static_cast<std::size_t>(ny[k]) * w + nx[k];
                    if (label[nidx] < 0 && is_fg(nx[k], ny[k])) {
                        label[nidx] = id;
                        stack.push_back(static_cast<std::int32_t>(nidx));
                    }
                }
            }
            cc.bbox = {min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
            std::sort(cc.pixels.begin(), cc.pixels.end(),
                      [](const PixelCoord& a, const PixelCoord& b) {
                          return a.y != b.y ? a.y < b.y : a.x < b.x;
                      });
            out.push_back(std::move(cc));
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const ConnectedComponent& a, const ConnectedComponent& b) {
                         if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
                         if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
                         return a.pixel_count() < b.pixel_count();
                     });
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].id = static_cast<int>(i);
    }
    return out;
}

CcFeatures compute_features(const GrayImage& img, const ConnectedComponent& cc,
                            const FeatureThresholds& t) {
    const Rect& b = cc.bbox;
    CcFeatures f;
    f.width = b.w;
    f.height = b.h;
    f.bbox_area = b.area();
    f.member_count = cc.pixel_count();

    // Clear paths are probed at the black level: gray shade connects a text
    // line into one component, so only glyph-level ink can block the
    // straight background path the logo rule looks for.
    std::vector<std::uint8_t> col_has_ink(static_cast<std::size_t>(b.w), 0);
    std::vector<std::uint8_t> row_has_ink(static_cast<std::size_t>(b.h), 0);
    for (int j = 0; j < b.h; ++j) {
        const std::uint8_t* row = img.row(b.y + j) + b.x;
        for (int i = 0; i < b.w; ++i) {
            const int v = row[i];
            if (v <= t.black_threshold) {
                ++f.black_count;
                col_has_ink[i] = 1;
                row_has_ink[j] = 1;
            } else if (v < t.fg_threshold) {
                ++f.gray_count;
            }
        }
    }
    f.has_clear_column =
        std::find(col_has_ink.begin(), col_has_ink.end(), 0) != col_has_ink.end();
    f.has_clear_row =
        std::find(row_has_ink.begin(), row_has_ink.end(), 0) != row_has_ink.end();

    // Runs of foreground along the middle scanlines; the scan is closed with
    // virtual background at both ends, so transitions = 2 * runs.
    const int mid_y = b.y + b.h / 2;
    int transitions = 0;
    bool prev = false;
    for (int i = 0; i < b.w; ++i) {
        const bool cur = img.at(b.x + i, mid_y) < t.fg_threshold;
        if (cur != prev) ++transitions;
        prev = cur;
    }
    if (prev) ++transitions;
    f.h_segments = transitions / 2;
    f.cuts = transitions / 2;

    const int mid_x = b.x + b.w / 2;
    int v_runs = 0;
    prev = false;
    for (int j = 0; j < b.h; ++j) {
        const bool cur = img.at(mid_x, b.y + j) < t.fg_threshold;
        if (cur && !prev) ++v_runs;
        prev = cur;
    }
    f.v_segments = v_runs;
    return f;
}

ComponentLabel classify_component(const CcFeatures& f, const ClassifierParams& p) {
    const auto w = static_cast<std::int64_t>(f.width);
    const auto h = static_cast<std::int64_t>(f.height);

    // (a) too small to be text
    if (f.member_count < p.min_area) {
        return ComponentLabel::Graphics;
    }
    // (b) horizontal / vertical line
    if (f.height <= p.line_thickness && w * 1000 > p.r_max_milli * h) {
        return ComponentLabel::Graphics;
    }
    if (f.width <= p.line_thickness && h * 1000 > p.r_max_milli * w) {
        return ComponentLabel::Graphics;
    }
    // (c) aspect ratio outside (r_min, r_max)
    if (!(w * 1000 > p.r_min_milli * h && w * 1000 < p.r_max_milli * h)) {
        return ComponentLabel::Graphics;
    }
    // (d) foreground/background ratio outside (ra_min, ra_max), in percent
    const std::int64_t scaled = f.member_count * 100 * 1000;
    if (!(scaled > p.ra_min_milli * f.bbox_area &&
          scaled < p.ra_max_milli * f.bbox_area)) {
        return ComponentLabel::Graphics;
    }
    // (e) over-tall blob with no clear straight path through it
    if (f.height > p.max_char_height && !f.has_clear_column && !f.has_clear_row) {
        return ComponentLabel::Graphics;
    }
    return ComponentLabel::Text;
}

SeparationResult separate_text_graphics(const GrayImage& img, const BlockMask& mask,
                                        const ClassifierParams& p,
                                        const FeatureThresholds& t) {
    p.validate();
    SeparationResult result;
    result.text_image = img;
    std::vector<ConnectedComponent> ccs = extract_components(img, mask, t.fg_threshold);
    result.components.reserve(ccs.size());
    for (auto& cc : ccs) {
        ClassifiedComponent entry;
        entry.features = compute_features(img, cc, t);
        entry.label = classify_component(entry.features, p);
        entry.cc = std::move(cc);
        if (entry.label == ComponentLabel::Graphics) {
            for (const PixelCoord& px : entry.cc.pixels) {
                result.text_image.set(px.x, px.y, 255);
            }
        }
        result.components.push_back(std::move(entry));
    }
    return result;
}

} // namespace cardprep
