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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cardprep/config.hpp"
#include "cardprep/error.hpp"
#include "cardprep/eval.hpp"
#include "cardprep/pgm.hpp"
#include "cardprep/pipeline.hpp"
#include "cardprep/synth.hpp"

namespace fs = std::filesystem;
using namespace cardprep;

namespace {

PipelineConfig config_from(const std::string& config_path,
                           const std::string& mode_flag) {
    PipelineConfig cfg;
    if (!config_path.empty()) {
        cfg = load_config_file(config_path);
    }
    if (mode_flag == "float") {
        cfg.mode = ArithmeticMode::Float;
    } else if (mode_flag == "integer") {
        cfg.mode = ArithmeticMode::Integer;
    } else if (!mode_flag.empty()) {
        throw ConfigError("--mode must be float or integer, got \"" + mode_flag +
                          "\"");
    }
    return cfg;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open \"" + path.string() + "\" for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing \"" + path.string() + "\"");
    }
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open \"" + path.string() + "\" for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_separate(const std::string& input, const std::string& config_path,
                 const std::string& out_dir, const std::string& mode_flag) {
    const PipelineConfig cfg = config_from(config_path, mode_flag);
    const GrayImage img = load_pgm_file(input);
    const PipelineResult result = run_pipeline(img, cfg);

    fs::create_directories(out_dir);
    save_pgm_file(result.separation.text_image, (fs::path(out_dir) / "text.pgm").string());
    write_text_file(fs::path(out_dir) / "regions.txt", format_regions(result));
    for (std::size_t k = 0; k < result.text_regions.size(); ++k) {
        const fs::path name = fs::path(out_dir) / ("region_" + std::to_string(k) + ".pgm");
        save_pgm_file(result.text_regions[k].deskewed, name.string());
    }
    return 0;
}

int cmd_evaluate(const std::string& results, const std::string& truth_path,
                 const std::string& out_csv, const std::string& config_path) {
    const PipelineConfig cfg = config_from(config_path, "");

    fs::path regions_path(results);
    if (fs::is_directory(regions_path)) {
        regions_path /= "regions.txt";
    }
    const std::vector<GroundTruthRegion> predicted_regions =
        parse_regions(read_text_file(regions_path));
    const std::vector<GroundTruthRegion> truth =
        parse_regions(read_text_file(truth_path));

    std::vector<LabeledBox> predictions;
    predictions.reserve(predicted_regions.size());
    for (const GroundTruthRegion& r : predicted_regions) {
        predictions.push_back({r.label, r.bbox});
    }

    const ConfusionCounts counts =
        match_components(predictions, truth, cfg.iou_min_milli);
    const Metrics m = metrics(counts);

    write_text_file(out_csv, metrics_csv_header() + "\n" +
                                 metrics_csv_row(regions_path.string(), counts, m) +
                                 "\n");

    auto cell = [](const std::optional<double>& v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v ? *v : std::nan(""));
        return std::string(buf);
    };
    std::cout << cell(m.recall) << " " << cell(m.precision) << " "
              << cell(m.accuracy) << "\n";
    return 0;
}

int cmd_bench(const std::string& input, const std::string& config_path,
              int reps, const std::string& out_csv, const std::string& mode_flag) {
    const PipelineConfig cfg = config_from(config_path, mode_flag);
    const GrayImage img = load_pgm_file(input);
    const BenchReport report = bench_pipeline(img, cfg, reps);
    const std::string csv = bench_csv_header() + "\n" + bench_csv_row(report) + "\n";
    std::cout << csv;
    if (!out_csv.empty()) {
        write_text_file(out_csv, csv);
    }
    return 0;
}

int cmd_synth(const SynthCardSpec& spec, const std::string& out_dir) {
    const SynthCard card = generate_card(spec);
    fs::create_directories(out_dir);
    save_pgm_file(card.image, (fs::path(out_dir) / "card.pgm").string());
    write_text_file(fs::path(out_dir) / "card.truth", format_truth(card.truth));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Business card image preprocessing: text/graphics separation, "
                 "per-region skew correction, evaluation and benchmarking"};
    app.require_subcommand(1);

    std::string config_path;
    std::string mode_flag;
    std::string out;

    auto* separate = app.add_subcommand("separate",
                                        "Separate text from graphics and deskew text regions");
    std::string sep_input;
    separate->add_option("input", sep_input, "Input PGM (P5)")->required();
    separate->add_option("--config", config_path, "Pipeline config file");
    separate->add_option("--out", out, "Output directory")->required();
    separate->add_option("--mode", mode_flag, "Arithmetic mode: float|integer");

    auto* evaluate = app.add_subcommand("evaluate",
                                        "Score a regions file against ground truth");
    std::string eval_results, eval_truth;
    std::string eval_csv = "metrics.csv";
    evaluate->add_option("results", eval_results, "regions.txt or a separate output dir")
        ->required();
    evaluate->add_option("truth", eval_truth, "Ground-truth regions file")->required();
    evaluate->add_option("--out", eval_csv, "Metrics CSV path");
    evaluate->add_option("--config", config_path, "Pipeline config file");

    auto* bench = app.add_subcommand("bench", "Time the pipeline stages");
    std::string bench_input;
    int reps = 3;
    bench->add_option("input", bench_input, "Input PGM (P5)")->required();
    bench->add_option("--config", config_path, "Pipeline config file");
    bench->add_option("--reps", reps, "Repetitions (median is reported)");
    bench->add_option("--out", out, "Also write the CSV here");
    bench->add_option("--mode", mode_flag, "Arithmetic mode: float|integer");

    auto* synth = app.add_subcommand("synth", "Generate a synthetic card + ground truth");
    std::string synth_spec_path;
    std::uint64_t synth_seed = 0;
    SynthCardSpec flag_spec;
    std::string skew_list;
    synth->add_option("--spec", synth_spec_path, "Synth spec file (key = value)");
    auto* seed_opt = synth->add_option("--seed", synth_seed, "RNG seed");
    synth->add_option("--out", out, "Output directory")->required();
    synth->add_option("--width", flag_spec.width, "Card width in pixels");
    synth->add_option("--height", flag_spec.height, "Card height in pixels");
    synth->add_option("--lines", flag_spec.n_text_lines, "Number of text lines");
    synth->add_option("--skew", skew_list, "Per-line skew degrees, comma-separated");
    synth->add_option("--logo", flag_spec.include_logo, "Include a logo square");
    synth->add_option("--rules", flag_spec.include_lines, "Include rule lines");
    synth->add_option("--background", flag_spec.background, "Background intensity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (separate->parsed()) {
            return cmd_separate(sep_input, config_path, out, mode_flag);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(eval_results, eval_truth, eval_csv, config_path);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_input, config_path, reps, out, mode_flag);
        }
        if (synth->parsed()) {
            SynthCardSpec spec;
            if (!synth_spec_path.empty()) {
                spec = parse_synth_spec(read_text_file(synth_spec_path));
            }
            auto flag_set = [&](const char* name) {
                return !synth->get_option(name)->empty();
            };
            if (flag_set("--width")) spec.width = flag_spec.width;
            if (flag_set("--height")) spec.height = flag_spec.height;
            if (flag_set("--lines")) spec.n_text_lines = flag_spec.n_text_lines;
            if (flag_set("--logo")) spec.include_logo = flag_spec.include_logo;
            if (flag_set("--rules")) spec.include_lines = flag_spec.include_lines;
            if (flag_set("--background")) spec.background = flag_spec.background;
            if (!seed_opt->empty()) spec.seed = synth_seed;
            if (!skew_list.empty()) {
                spec.skew_per_line.clear();
                std::istringstream ss(skew_list);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        spec.skew_per_line.push_back(std::stod(item));
                    } catch (const std::exception&) {
                        throw ConfigError("--skew: invalid angle \"" + item + "\"");
                    }
                }
            }
            return cmd_synth(spec, out);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const LengthError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
