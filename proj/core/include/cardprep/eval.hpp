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

#ifndef CARDPREP_EVAL_HPP
#define CARDPREP_EVAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cardprep/components.hpp"
#include "cardprep/raster.hpp"

namespace cardprep {

struct GroundTruthRegion {
    ComponentLabel label = ComponentLabel::Text;
    Rect bbox;
    std::optional<double> angle; // optional sixth column in truth files
};

/// A prediction reduced to what matching needs.
struct LabeledBox {
    ComponentLabel label = ComponentLabel::Text;
    Rect bbox;
};

/// Component-level confusion counts: rows are ground truth, columns the
/// pipeline's verdict.
struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    ConfusionCounts& operator+=(const ConfusionCounts& o) {
        tp += o.tp;
        fp += o.fp;
        tn += o.tn;
        fn += o.fn;
        return *this;
    }
};

/// Recall = tp/(tp+fn), precision = tp/(tp+fp), accuracy = (tp+tn)/all.
/// A zero denominator leaves the metric unset rather than crashing.
struct Metrics {
    std::optional<double> recall;
    std::optional<double> precision;
    std::optional<double> accuracy;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

/// Greedy max-overlap matching: every prediction pairs with the free truth
/// region of largest IoU at or above iou_min (given in thousandths, so 500
/// means 0.5); unmatched predictions count against an implicit graphics
/// truth, unmatched text truths against an implicit graphics prediction.
/// iou_min_milli outside (0, 1000] is a ConfigError.
ConfusionCounts match_components(std::span<const LabeledBox> predictions,
                                 std::span<const GroundTruthRegion> truth,
                                 int iou_min_milli);

ConfusionCounts match_components(const SeparationResult& result,
                                 std::span<const GroundTruthRegion> truth,
                                 int iou_min_milli);

Metrics metrics(const ConfusionCounts& c);

/// One pipeline evaluation per classifier setting; points are sorted by
/// (fpr, tpr). A zero denominator maps that rate to 0 so sweeps stay
/// sortable. An empty grid is a ConfigError.
std::vector<RocPoint> roc_sweep(const GrayImage& image,
                                std::span<const GroundTruthRegion> truth,
                                const ThresholdParams& thr, int block_size,
                                const FeatureThresholds& feat, int iou_min_milli,
                                std::span<const ClassifierParams> param_grid);

/// Parse the regions/truth text format: `label x y w h [angle]` per line
/// with label T or G, blank lines and '#' comments ignored, extra numeric
/// columns tolerated. ParseError messages cite the 1-based line number.
std::vector<GroundTruthRegion> parse_regions(const std::string& text);

/// `label x y w h angle confidence` with two-decimal angles.
std::string format_region_line(ComponentLabel label, const Rect& bbox,
                               double angle, int confidence);

std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& image, const ConfusionCounts& c,
                            const Metrics& m);
std::string roc_csv(std::span<const RocPoint> points);

} // namespace cardprep

#endif // CARDPREP_EVAL_HPP
