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

// Stage timings across capture resolutions, plus a float-vs-integer
// rotation microbenchmark. Single-threaded by design so numbers are stable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cardprep/pipeline.hpp"
#include "cardprep/raster.hpp"
#include "cardprep/synth.hpp"

using namespace cardprep;

namespace {

struct Resolution {
    int width;
    int height;
    const char* tag;
};

// The common capture sizes between VGA and 3 MP.
constexpr Resolution kResolutions[] = {
    {640, 480, "0.3 MP"},   {800, 600, "0.45 MP"}, {1024, 768, "0.75 MP"},
    {1182, 886, "1 MP"},    {1672, 1254, "2 MP"},  {2048, 1536, "3 MP"},
};

double time_rotate(const GrayImage& img, ArithmeticMode mode, int reps) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    volatile std::uint64_t sink = 0;
    for (int i = 0; i < reps; ++i) {
        const GrayImage out = rotate(img, 7.3, 255, mode);
        sink = sink + out.at(out.width() / 2, out.height() / 2);
    }
    (void)sink;
    return std::chrono::duration<double, std::milli>(clock::now() - start).count() /
           reps;
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    if (reps < 1) {
        std::fprintf(stderr, "usage: %s [repetitions]\n", argv[0]);
        return 1;
    }

    std::printf("# pipeline stage medians, %d reps per resolution\n", reps);
    std::printf("%s\n", bench_csv_header().c_str());
    for (const Resolution& res : kResolutions) {
        SynthCardSpec spec;
        spec.width = res.width;
        spec.height = res.height;
        spec.n_text_lines = 4;
        spec.skew_per_line = {5.0, -3.0, 0.0, 8.0};
        spec.seed = 1;
        const SynthCard card = generate_card(spec);
        const BenchReport report = bench_pipeline(card.image, PipelineConfig{}, reps);
        std::printf("%s\n", bench_csv_row(report).c_str());
    }

    std::printf("\n# rotate 512x512 by 7.3 deg, per-call ms\n");
    SynthCardSpec spec;
    spec.width = 512;
    spec.height = 512;
    spec.n_text_lines = 3;
    spec.seed = 2;
    const GrayImage img = generate_card(spec).image;
    std::printf("rotate_float_ms,%.3f\n", time_rotate(img, ArithmeticMode::Float, reps));
    std::printf("rotate_integer_ms,%.3f\n",
                time_rotate(img, ArithmeticMode::Integer, reps));
    return 0;
}
