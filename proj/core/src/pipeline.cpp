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

#include "cardprep/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cardprep/error.hpp"
#include "cardprep/memtrack.hpp"

namespace cardprep {

namespace {

double ms_since(std::chrono::steady_clock::time_point start,
                std::chrono::steady_clock::time_point end) {
    return std::chrono::duration<double, std::milli>(end - start).count();
}

} // namespace

PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg) {
    using clock = std::chrono::steady_clock;
    PipelineResult result;

    const auto t0 = clock::now();
    auto [suppressed, mask] = eliminate_background(
        img, threshold_params(cfg), resolved_block_size(cfg, img.width(), img.height()));
    result.suppressed = std::move(suppressed);
    result.mask = std::move(mask);
    const auto t1 = clock::now();

    const ClassifierParams params =
        resolved_classifier(cfg, img.width(), img.height());
    result.separation = separate_text_graphics(result.suppressed, result.mask,
                                               params, feature_thresholds(cfg));
    const auto t2 = clock::now();

    for (const ClassifiedComponent& entry : result.separation.components) {
        if (entry.label != ComponentLabel::Text) {
            continue;
        }
        TextRegion region;
        region.component_id = entry.cc.id;
        region.bbox = entry.cc.bbox;
        GrayImage cropped = crop(result.separation.text_image, entry.cc.bbox);
        const BottomProfile profile =
            bottom_profile(cropped, cfg.white_threshold, cfg.min_run);
        region.estimate = estimate_skew(profile, cfg.mode);
        region.confident = region.estimate && !region.estimate->low_confidence &&
                           std::fabs(region.estimate->angle) <= 45.0;
        if (region.confident) {
            region.deskewed = deskew_region(cropped, *region.estimate, cfg.mode);
        } else {
            region.deskewed = std::move(cropped);
        }
        result.text_regions.push_back(std::move(region));
    }
    const auto t3 = clock::now();

    result.times.bg_ms = ms_since(t0, t1);
    result.times.cc_ms = ms_since(t1, t2);
    result.times.skew_ms = ms_since(t2, t3);
    result.times.total_ms = ms_since(t0, t3);
    return result;
}

std::string BenchReport::resolution() const {
    return std::to_string(width) + "x" + std::to_string(height);
}

BenchReport bench_pipeline(const GrayImage& img, const PipelineConfig& cfg,
                           int repetitions) {
    if (repetitions < 1) {
        throw ConfigError("bench repetitions must be at least 1, got " +
                          std::to_string(repetitions));
    }
    std::vector<StageTimes> runs;
    runs.reserve(static_cast<std::size_t>(repetitions));
    memtrack::reset_high_water();
    for (int i = 0; i < repetitions; ++i) {
        runs.push_back(run_pipeline(img, cfg).times);
    }

    auto median_of = [&](double StageTimes::* field) {
        std::vector<double> v;
        v.reserve(runs.size());
        for (const StageTimes& t : runs) v.push_back(t.*field);
        std::sort(v.begin(), v.end());
        return v[(v.size() - 1) / 2];
    };

    BenchReport report;
    report.width = img.width();
    report.height = img.height();
    report.median.bg_ms = median_of(&StageTimes::bg_ms);
    report.median.cc_ms = median_of(&StageTimes::cc_ms);
    report.median.skew_ms = median_of(&StageTimes::skew_ms);
    report.median.total_ms = median_of(&StageTimes::total_ms);
    report.peak_bytes = memtrack::high_water_bytes();
    return report;
}

std::string bench_csv_header() {
    return "resolution,bg_ms,cc_ms,skew_ms,total_ms,peak_bytes";
}

std::string bench_csv_row(const BenchReport& r) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "%s,%.3f,%.3f,%.3f,%.3f,%llu",
                  r.resolution().c_str(), r.median.bg_ms, r.median.cc_ms,
                  r.median.skew_ms, r.median.total_ms,
                  static_cast<unsigned long long>(r.peak_bytes));
    return buf;
}

std::string format_regions(const PipelineResult& result) {
    std::ostringstream os;
    std::size_t text_idx = 0;
    for (const ClassifiedComponent& entry : result.separation.components) {
        double angle = 0.0;
        int confidence = 0;
        if (entry.label == ComponentLabel::Text) {
            const TextRegion& region = result.text_regions[text_idx++];
            angle = region.angle();
            confidence = region.confident ? 1 : 0;
        }
        os << format_region_line(entry.label, entry.cc.bbox, angle, confidence)
           << '\n';
    }
    return os.str();
}

std::vector<RocPoint> roc_sweep(const GrayImage& image,
                                std::span<const GroundTruthRegion> truth,
                                const PipelineConfig& cfg,
                                std::span<const ClassifierParams> param_grid) {
    return roc_sweep(image, truth, threshold_params(cfg),
                     resolved_block_size(cfg, image.width(), image.height()),
                     feature_thresholds(cfg), cfg.iou_min_milli, param_grid);
}

} // namespace cardprep
