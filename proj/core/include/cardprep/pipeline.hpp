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

#ifndef CARDPREP_PIPELINE_HPP
#define CARDPREP_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cardprep/background.hpp"
#include "cardprep/components.hpp"
#include "cardprep/config.hpp"
#include "cardprep/eval.hpp"
#include "cardprep/raster.hpp"
#include "cardprep/skew.hpp"

namespace cardprep {

/// A component classified as text, with its skew estimate and the deskewed
/// crop. Estimates past 45 degrees or without enough profile support keep
/// the crop unrotated and drop the confidence flag.
struct TextRegion {
    int component_id = 0;
    Rect bbox;
    std::optional<SkewEstimate> estimate;
    bool confident = false;
    GrayImage deskewed;

    double angle() const { return estimate ? estimate->angle : 0.0; }
};

struct StageTimes {
    double bg_ms = 0.0;
    double cc_ms = 0.0;
    double skew_ms = 0.0;
    double total_ms = 0.0;
};

struct PipelineResult {
    GrayImage suppressed; // background-eliminated input
    BlockMask mask;
    SeparationResult separation;
    std::vector<TextRegion> text_regions;
    StageTimes times;
};

/// background elimination -> component classification -> per-region skew
/// correction; stage boundaries are the block-mask emission and the
/// separation result.
PipelineResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg);

/// Median stage timings and the instrumented allocation high-water mark
/// over `repetitions` runs.
struct BenchReport {
    int width = 0;
    int height = 0;
    StageTimes median;
    std::uint64_t peak_bytes = 0;

    std::string resolution() const;
};

BenchReport bench_pipeline(const GrayImage& img, const PipelineConfig& cfg,
                           int repetitions);

std::string bench_csv_header();
std::string bench_csv_row(const BenchReport& r);

/// regions.txt content: one `label x y w h angle confidence` line per
/// component (graphics rows carry angle 0 and confidence 0).
std::string format_regions(const PipelineResult& result);

/// Spec-signature convenience: sweep the classifier grid against truth on
/// one image with the remaining knobs taken from cfg.
std::vector<RocPoint> roc_sweep(const GrayImage& image,
                                std::span<const GroundTruthRegion> truth,
                                const PipelineConfig& cfg,
                                std::span<const ClassifierParams> param_grid);

} // namespace cardprep

#endif // CARDPREP_PIPELINE_HPP
