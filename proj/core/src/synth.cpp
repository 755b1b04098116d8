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

#include "cardprep/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cardprep/error.hpp"

namespace cardprep {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint8_t kBarIntensity = 150; // gray; survives block elimination

// mt19937_64 raw draws only: std::*_distribution output is
// implementation-defined and would break cross-platform determinism.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int range(int lo, int hi) { // inclusive
        if (hi <= lo) {
            return lo;
        }
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

struct PaintedBox {
    int min_x = 1 << 30, min_y = 1 << 30, max_x = -1, max_y = -1;

    void cover(int x, int y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    Rect rect() const { return {min_x, min_y, max_x - min_x + 1, max_y - min_y + 1}; }
    bool empty() const { return max_x < 0; }
};

bool rects_overlap(const Rect& a, const Rect& b, int margin) {
    return a.x - margin < b.x + b.w && b.x - margin < a.x + a.w &&
           a.y - margin < b.y + b.h && b.y - margin < a.y + a.h;
}

bool clear_of_all(const Rect& r, const std::vector<Rect>& taken, int margin) {
    for (const Rect& t : taken) {
        if (rects_overlap(r, t, margin)) {
            return false;
        }
    }
    return true;
}

// Dark glyph boxes over a gray baseline bar, everything following a tilted
// baseline. Columns are filled individually so the content tracks the
// baseline exactly. Returns the painted bbox.
Rect draw_text_line(GrayImage& img, int x0, int base_y, int line_w, int glyph_h,
                    double angle_deg, Rng& rng) {
    const double tan_t = std::tan(angle_deg * kPi / 180.0);
    PaintedBox box;
    auto baseline = [&](int x) {
        return base_y - static_cast<int>(std::lround(tan_t * (x - x0)));
    };

    const int bar_t = 2;
    int cursor = x0;
    const int x_end = x0 + line_w;
    while (cursor < x_end) {
        const int gw = std::min(rng.range(std::max(3, glyph_h / 3), glyph_h),
                                x_end - cursor);
        const int gh = rng.range((glyph_h * 2) / 3, glyph_h);
        const int ink = rng.range(30, 90);
        for (int x = cursor; x < cursor + gw; ++x) {
            const int yb = baseline(x);
            for (int y = yb - gh + 1; y <= yb; ++y) {
                img.set(x, y, static_cast<std::uint8_t>(ink));
                box.cover(x, y);
            }
        }
        cursor += gw + rng.range(2, std::max(3, glyph_h / 3));
    }
    for (int x = x0; x < x_end; ++x) {
        const int yb = baseline(x);
        for (int y = yb + 1; y <= yb + bar_t; ++y) {
            img.set(x, y, kBarIntensity);
            box.cover(x, y);
        }
    }
    return box.rect();
}

void draw_blotch(GrayImage& img, int cx, int cy, int radius, int depth) {
    const int r2 = radius * radius;
    for (int y = std::max(0, cy - radius);
         y <= std::min(img.height() - 1, cy + radius); ++y) {
        for (int x = std::max(0, cx - radius);
             x <= std::min(img.width() - 1, cx + radius); ++x) {
            const int dx = x - cx;
            const int dy = y - cy;
            const int d2 = dx * dx + dy * dy;
            if (d2 >= r2) {
                continue;
            }
            const int dip = (depth * (r2 - d2) + r2 / 2) / r2;
            const int v = img.at(x, y) - dip;
            img.set(x, y, static_cast<std::uint8_t>(std::max(0, v)));
        }
    }
}

} // namespace

SynthCard generate_card(const SynthCardSpec& spec) {
    if (spec.width < 128 || spec.height < 128) {
        throw ConfigError("synthetic card must be at least 128x128, got " +
                          std::to_string(spec.width) + "x" +
                          std::to_string(spec.height));
    }
    if (spec.n_text_lines < 0) {
        throw ConfigError("n_text_lines must be non-negative");
    }
    if (spec.background < 160 || spec.background > 255) {
        throw ConfigError("background intensity must lie in [160, 255]");
    }
    Rng rng(spec.seed);
    const int W = spec.width;
    const int H = spec.height;

    GrayImage img(W, H);
    for (int y = 0; y < H; ++y) {
        std::uint8_t* row = img.row(y);
        for (int x = 0; x < W; ++x) {
            const int v = spec.background - 2 + static_cast<int>(rng.raw() % 5);
            row[x] = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
        }
    }

    SynthCard card;
    std::vector<Rect> taken;

    // Text lines stacked top-down; skew consumes vertical room, so each
    // band reserves its ramp.
    int y_cursor = 32;
    for (int i = 0; i < spec.n_text_lines; ++i) {
        const double angle = i < static_cast<int>(spec.skew_per_line.size())
                                 ? spec.skew_per_line[i]
                                 : 0.0;
        if (!(std::fabs(angle) <= 45.0)) {
            throw ConfigError("skew_per_line entries must lie in [-45, 45]");
        }
        const int glyph_h = rng.range(22, 32);
        const int hi_w = std::min((W * 3) / 4, W - 48);
        const int lo_w = std::min(std::max(60, W / 3), hi_w);
        const int line_w = rng.range(lo_w, hi_w);
        const int ramp = static_cast<int>(
            std::ceil(std::fabs(std::tan(angle * kPi / 180.0)) * line_w));
        const int band_h = glyph_h + 2 + ramp + 2;
        if (y_cursor + band_h + 24 > H) {
            throw ConfigError("card too small for " +
                              std::to_string(spec.n_text_lines) + " text lines");
        }
        const int x0 = rng.range(24, std::max(25, W - line_w - 24));
        // base_y: bottom of the glyphs at x0; a rising line climbs from here.
        const int base_y = angle >= 0 ? y_cursor + band_h - 3 : y_cursor + glyph_h;
        const Rect painted = draw_text_line(img, x0, base_y, line_w, glyph_h, angle, rng);
        card.truth.push_back({ComponentLabel::Text, painted, angle});
        taken.push_back(painted);
        y_cursor += band_h + rng.range(22, 38);
    }

    if (spec.include_logo) {
        const int side = std::min(std::max(24, H / 6), std::min(W, H) - 32);
        Rect r;
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            r = {rng.range(16, W - side - 16), rng.range(16, H - side - 16),
                 side, side};
            placed = clear_of_all(r, taken, 16);
        }
        if (placed) {
            for (int y = r.y; y < r.y + r.h; ++y) {
                for (int x = r.x; x < r.x + r.w; ++x) {
                    img.set(x, y, 60);
                }
            }
            card.truth.push_back({ComponentLabel::Graphics, r, std::nullopt});
            taken.push_back(r);
        }
    }

    if (spec.include_lines) {
        const int n_rules = rng.range(1, 2);
        for (int i = 0; i < n_rules; ++i) {
            const bool horizontal = rng.range(0, 3) != 0;
            const int t = rng.range(1, 3);
            Rect r;
            bool placed = false;
            for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                if (horizontal) {
                    const int len = rng.range((W * 3) / 5, W - 32);
                    r = {rng.range(16, W - len - 16), rng.range(16, H - t - 16),
                         len, t};
                } else {
                    const int len = rng.range(H / 3, H - 32);
                    r = {rng.range(16, W - t - 16), rng.range(16, H - len - 16),
                         t, len};
                }
                placed = clear_of_all(r, taken, 12);
            }
            if (placed) {
                for (int y = r.y; y < r.y + r.h; ++y) {
                    for (int x = r.x; x < r.x + r.w; ++x) {
                        img.set(x, y, 80);
                    }
                }
                card.truth.push_back({ComponentLabel::Graphics, r, std::nullopt});
                taken.push_back(r);
            }
        }
    }

    // Background blotches: smooth gray texture the eliminator must remove.
    // Kept shallow (per-block variation stays under the adaptive threshold)
    // and away from content so no component grows a halo.
    const int n_blotches = rng.range(1, 3);
    for (int i = 0; i < n_blotches; ++i) {
        const int radius = rng.range(48, 96);
        for (int attempt = 0; attempt < 32; ++attempt) {
            const int cx = rng.range(radius, W - radius - 1);
            const int cy = rng.range(radius, H - radius - 1);
            const Rect r{cx - radius, cy - radius, 2 * radius, 2 * radius};
            if (clear_of_all(r, taken, 40)) {
                draw_blotch(img, cx, cy, radius, rng.range(6, 9));
                break;
            }
        }
    }

    card.image = std::move(img);
    return card;
}

GrayImage make_skewed_line_region(int line_width, int glyph_height,
                                  double angle_deg, std::uint64_t seed) {
    if (line_width < 32 || glyph_height < 8) {
        throw ConfigError("line region too small");
    }
    if (!(std::fabs(angle_deg) <= 45.0)) {
        throw ConfigError("angle must lie in [-45, 45]");
    }
    Rng rng(seed);
    const int ramp = static_cast<int>(
        std::ceil(std::fabs(std::tan(angle_deg * kPi / 180.0)) * line_width));
    const int margin = 4;
    const int w = line_width + 2 * margin;
    const int h = glyph_height + 2 + ramp + 2 * margin;
    GrayImage region(w, h, 255);
    const int base_y = angle_deg >= 0 ? h - margin - 3 : margin + glyph_height;
    draw_text_line(region, margin, base_y, line_width, glyph_height, angle_deg, rng);
    return region;
}

std::string format_truth(const std::vector<GroundTruthRegion>& truth) {
    std::ostringstream os;
    for (const GroundTruthRegion& r : truth) {
        os << (r.label == ComponentLabel::Text ? 'T' : 'G') << ' ' << r.bbox.x
           << ' ' << r.bbox.y << ' ' << r.bbox.w << ' ' << r.bbox.h;
        if (r.angle) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.2f", *r.angle);
            os << buf;
        }
        os << '\n';
    }
    return os.str();
}

SynthCardSpec parse_synth_spec(const std::string& text) {
    SynthCardSpec spec;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped;
        // trim
        std::size_t b = line.find_first_not_of(" \t\r");
        std::size_t e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) {
            continue;
        }
        stripped = line.substr(b, e - b + 1);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("synth spec line " + std::to_string(line_no) +
                              ": expected `key = value`");
        }
        auto trim_field = [](std::string s) {
            const std::size_t fb = s.find_first_not_of(" \t");
            const std::size_t fe = s.find_last_not_of(" \t");
            return fb == std::string::npos ? std::string()
                                           : s.substr(fb, fe - fb + 1);
        };
        const std::string key = trim_field(stripped.substr(0, eq));
        const std::string value = trim_field(stripped.substr(eq + 1));
        try {
            if (key == "width") {
                spec.width = std::stoi(value);
            } else if (key == "height") {
                spec.height = std::stoi(value);
            } else if (key == "lines") {
                spec.n_text_lines = std::stoi(value);
            } else if (key == "skew") {
                spec.skew_per_line.clear();
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ',')) {
                    spec.skew_per_line.push_back(std::stod(item));
                }
            } else if (key == "logo") {
                spec.include_logo = value == "1" || value == "true";
            } else if (key == "rules") {
                spec.include_lines = value == "1" || value == "true";
            } else if (key == "background") {
                spec.background = std::stoi(value);
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else {
                throw ConfigError("unknown synth spec key \"" + key + "\" (line " +
                                  std::to_string(line_no) + ")");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("synth spec key \"" + key + "\": invalid value \"" +
                              value + "\"");
        }
    }
    return spec;
}

} // namespace cardprep
