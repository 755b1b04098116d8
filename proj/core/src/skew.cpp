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

#include "cardprep/skew.hpp"

namespace cardprep {

BottomProfile bottom_profile(const GrayImage& region, int white_threshold,
                             int min_run) {
    const int w = region.width();
    const int h = region.height();
    BottomProfile p;
    p.n = w;
    p.heights.assign(static_cast<std::size_t>(w), 0);
    p.valid.assign(static_cast<std::size_t>(w), 0);

    for (int x = 0; x < w; ++x) {
        int first = -1;
        for (int y = h - 1; y >= 0; --y) {
            if (region.at(x, y) < white_threshold) {
                first = y;
                break;
            }
        }
        if (first < 0) {
            continue; // all-white column
        }
        int run = 0;
        for (int y = first; y >= 0 && region.at(x, y) < white_threshold; --y) {
            ++run;
        }
        p.heights[static_cast<std::size_t>(x)] = (h - 1) - first;
        p.valid[static_cast<std::size_t>(x)] = run >= min_run ? 1 : 0;
    }
    return p;
}

std::optional<ProfileStats> profile_stats(const BottomProfile& p) {
    std::int64_t sum = 0;
    std::int64_t n = 0;
    for (std::size_t i = 0; i < p.heights.size(); ++i) {
        if (p.valid[i]) {
            sum += p.heights[i];
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    ProfileStats s;
    s.mu_q8 = static_cast<std::int32_t>((sum * 256 + n / 2) / n);
    std::int64_t dev = 0;
    for (std::size_t i = 0; i < p.heights.size(); ++i) {
        if (p.valid[i]) {
            const std::int64_t d =
                static_cast<std::int64_t>(p.heights[i]) * 256 - s.mu_q8;
            dev += d < 0 ? -d : d;
        }
    }
    s.tau_q8 = static_cast<std::int32_t>((dev + n / 2) / n);
    return s;
}

namespace {

double pair_angle(int h_right, int x_right, int h_left, int x_left,
                  ArithmeticMode mode) {
    const std::int64_t dy = h_right - h_left;
    const std::int64_t dx = x_right - x_left;
    return mode == ArithmeticMode::Integer ? atan_deg_lut(dy, dx)
                                           : atan_deg_std(dy, dx);
}

} // namespace

std::optional<SkewEstimate> estimate_skew(const BottomProfile& p,
                                          ArithmeticMode mode) {
    const auto stats = profile_stats(p);
    if (!stats) {
        return std::nullopt;
    }
    SkewEstimate est;
    est.stats = *stats;

    const std::int64_t lo = static_cast<std::int64_t>(stats->mu_q8) - stats->tau_q8;
    const std::int64_t hi = static_cast<std::int64_t>(stats->mu_q8) + stats->tau_q8;
    std::vector<int> sx;
    std::vector<int> sh;
    for (std::size_t i = 0; i < p.heights.size(); ++i) {
        if (!p.valid[i]) {
            continue;
        }
        const std::int64_t h_q8 = static_cast<std::int64_t>(p.heights[i]) * 256;
        if (h_q8 >= lo && h_q8 <= hi) {
            sx.push_back(static_cast<int>(i));
            sh.push_back(p.heights[i]);
        }
    }

    if (sx.size() < 2 || sx.front() == sx.back()) {
        est.low_confidence = true;
        if (!sx.empty()) {
            est.h1 = est.h2 = est.h3 = sh.front();
            est.x1 = est.x2 = est.x3 = sx.front();
        }
        return est;
    }

    // The extreme heights sit on quantized steps; anchoring their x at the
    // center of the boundary run of equal heights cancels the half-step
    // endpoint bias a staircase profile would otherwise introduce.
    const std::size_t last = sx.size() - 1;
    std::size_t left_end = 0;
    while (left_end + 1 <= last && sh[left_end + 1] == sh[0] &&
           sx[left_end + 1] == sx[left_end] + 1) {
        ++left_end;
    }
    std::size_t right_begin = last;
    while (right_begin >= 1 && sh[right_begin - 1] == sh[last] &&
           sx[right_begin - 1] == sx[right_begin] - 1) {
        --right_begin;
    }

    const std::size_t mid = (sx.size() - 1) / 2;
    est.x1 = sx[left_end / 2];
    est.h1 = sh.front();
    est.x2 = sx[(right_begin + last + 1) / 2];
    est.h2 = sh.back();
    est.x3 = sx[mid];
    est.h3 = sh[mid];

    est.alpha = pair_angle(est.h2, est.x2, est.h1, est.x1, mode);
    est.beta = pair_angle(est.h3, est.x3, est.h1, est.x1, mode);
    est.gamma = pair_angle(est.h2, est.x2, est.h3, est.x3, mode);
    est.angle = (est.alpha + est.beta + est.gamma) / 3.0;
    return est;
}

GrayImage deskew_region(const GrayImage& region, const SkewEstimate& est,
                        ArithmeticMode mode) {
    if (est.low_confidence) {
        return region;
    }
    return rotate(region, -est.angle, 255, mode);
}

} // namespace cardprep
