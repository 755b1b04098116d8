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

#include "cardprep/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cardprep/background.hpp"
#include "cardprep/error.hpp"

namespace cardprep {

namespace {

std::int64_t intersection_area(const Rect& a, const Rect& b) {
    const int x0 = std::max(a.x, b.x);
    const int y0 = std::max(a.y, b.y);
    const int x1 = std::min(a.x + a.w, b.x + b.w);
    const int y1 = std::min(a.y + a.h, b.y + b.h);
    if (x1 <= x0 || y1 <= y0) {
        return 0;
    }
    return static_cast<std::int64_t>(x1 - x0) * (y1 - y0);
}

struct Candidate {
    double iou; // ordering only; the threshold test is exact
    std::size_t pred;
    std::size_t truth;
};

} // namespace

ConfusionCounts match_components(std::span<const LabeledBox> predictions,
                                 std::span<const GroundTruthRegion> truth,
                                 int iou_min_milli) {
    if (iou_min_milli <= 0 || iou_min_milli > 1000) {
        throw ConfigError("iou_min must lie in (0, 1], got " +
                          std::to_string(iou_min_milli / 1000.0));
    }

    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        for (std::size_t j = 0; j < truth.size(); ++j) {
            const std::int64_t inter =
                intersection_area(predictions[i].bbox, truth[j].bbox);
            if (inter == 0) {
                continue;
            }
            const std::int64_t uni =
                predictions[i].bbox.area() + truth[j].bbox.area() - inter;
            if (inter * 1000 < static_cast<std::int64_t>(iou_min_milli) * uni) {
                continue;
            }
            candidates.push_back({static_cast<double>(inter) / static_cast<double>(uni),
                                  i, j});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.iou != b.iou) return a.iou > b.iou;
                  if (a.pred != b.pred) return a.pred < b.pred;
                  return a.truth < b.truth;
              });

    std::vector<std::uint8_t> pred_used(predictions.size(), 0);
    std::vector<std::uint8_t> truth_used(truth.size(), 0);
    ConfusionCounts c;
    for (const Candidate& cand : candidates) {
        if (pred_used[cand.pred] || truth_used[cand.truth]) {
            continue;
        }
        pred_used[cand.pred] = 1;
        truth_used[cand.truth] = 1;
        const bool truth_text = truth[cand.truth].label == ComponentLabel::Text;
        const bool pred_text = predictions[cand.pred].label == ComponentLabel::Text;
        if (truth_text && pred_text) ++c.tp;
        else if (!truth_text && pred_text) ++c.fp;
        else if (truth_text && !pred_text) ++c.fn;
        else ++c.tn;
    }
    // Unmatched predictions stand against implicit graphics truth.
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (!pred_used[i]) {
            if (predictions[i].label == ComponentLabel::Text) ++c.fp;
            else ++c.tn;
        }
    }
    // Missed text truths are implicit graphics predictions.
    for (std::size_t j = 0; j < truth.size(); ++j) {
        if (!truth_used[j] && truth[j].label == ComponentLabel::Text) {
            ++c.fn;
        }
    }
    return c;
}

ConfusionCounts match_components(const SeparationResult& result,
                                 std::span<const GroundTruthRegion> truth,
                                 int iou_min_milli) {
    std::vector<LabeledBox> boxes;
    boxes.reserve(result.components.size());
    for (const ClassifiedComponent& e : result.components) {
        boxes.push_back({e.label, e.cc.bbox});
    }
    return match_components(boxes, truth, iou_min_milli);
}

Metrics metrics(const ConfusionCounts& c) {
    Metrics m;
    if (c.tp + c.fn > 0) {
        m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    if (c.tp + c.fp > 0) {
        m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    }
    const std::int64_t total = c.tp + c.fp + c.tn + c.fn;
    if (total > 0) {
        m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
    }
    return m;
}

std::vector<RocPoint> roc_sweep(const GrayImage& image,
                                std::span<const GroundTruthRegion> truth,
                                const ThresholdParams& thr, int block_size,
                                const FeatureThresholds& feat, int iou_min_milli,
                                std::span<const ClassifierParams> param_grid) {
    if (param_grid.empty()) {
        throw ConfigError("roc sweep needs a non-empty parameter grid");
    }
    auto [suppressed, mask] = eliminate_background(image, thr, block_size);
    std::vector<RocPoint> points;
    points.reserve(param_grid.size());
    for (const ClassifierParams& params : param_grid) {
        const SeparationResult result =
            separate_text_graphics(suppressed, mask, params, feat);
        const ConfusionCounts c = match_components(result, truth, iou_min_milli);
        RocPoint pt;
        pt.fpr = (c.fp + c.tn) > 0
                     ? static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn)
                     : 0.0;
        pt.tpr = (c.tp + c.fn) > 0
                     ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn)
                     : 0.0;
        points.push_back(pt);
    }
    std::sort(points.begin(), points.end(), [](const RocPoint& a, const RocPoint& b) {
        if (a.fpr != b.fpr) return a.fpr < b.fpr;
        return a.tpr < b.tpr;
    });
    return points;
}

std::vector<GroundTruthRegion> parse_regions(const std::string& text) {
    std::vector<GroundTruthRegion> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label) || label[0] == '#') {
            continue;
        }
        GroundTruthRegion r;
        if (label == "T") {
            r.label = ComponentLabel::Text;
        } else if (label == "G") {
            r.label = ComponentLabel::Graphics;
        } else {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected label T or G, got \"" + label + "\"");
        }
        if (!(ls >> r.bbox.x >> r.bbox.y >> r.bbox.w >> r.bbox.h)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected `label x y w h`, got \"" + line + "\"");
        }
        if (r.bbox.w < 1 || r.bbox.h < 1 || r.bbox.x < 0 || r.bbox.y < 0) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": bad region geometry in \"" + line + "\"");
        }
        double angle = 0.0;
        if (ls >> angle) {
            r.angle = angle;
        }
        out.push_back(r);
    }
    return out;
}

std::string format_region_line(ComponentLabel label, const Rect& bbox,
                               double angle, int confidence) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%c %d %d %d %d %.2f %d",
                  label == ComponentLabel::Text ? 'T' : 'G', bbox.x, bbox.y,
                  bbox.w, bbox.h, angle, confidence);
    return buf;
}

std::string metrics_csv_header() {
    return "image,tp,fp,tn,fn,recall,precision,accuracy";
}

namespace {

std::string metric_cell(const std::optional<double>& v) {
    if (!v) {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

} // namespace

std::string metrics_csv_row(const std::string& image, const ConfusionCounts& c,
                            const Metrics& m) {
    std::ostringstream os;
    os << image << ',' << c.tp << ',' << c.fp << ',' << c.tn << ',' << c.fn << ','
       << metric_cell(m.recall) << ',' << metric_cell(m.precision) << ','
       << metric_cell(m.accuracy);
    return os.str();
}

std::string roc_csv(std::span<const RocPoint> points) {
    std::ostringstream os;
    char buf[64];
    for (const RocPoint& p : points) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f\n", p.fpr, p.tpr);
        os << buf;
    }
    return os.str();
}

} // namespace cardprep
