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

#include "cardprep/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cardprep/error.hpp"

namespace cardprep {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument(value);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key \"" + key + "\": invalid integer \"" +
                          value + "\"");
    }
}

void check_range(const std::string& key, std::int64_t v, std::int64_t lo,
                 std::int64_t hi) {
    if (v < lo || v > hi) {
        throw ConfigError("config key \"" + key + "\": value " +
                          std::to_string(v) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
    }
}

} // namespace

std::int64_t parse_milli(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) {
        throw ConfigError("empty decimal value");
    }
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    std::int64_t whole = 0;
    std::int64_t frac = 0;
    int frac_digits = 0;
    bool saw_digit = false;
    bool in_frac = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            if (in_frac) {
                throw ConfigError("invalid decimal \"" + text + "\"");
            }
            in_frac = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ConfigError("invalid decimal \"" + text + "\"");
        }
        saw_digit = true;
        if (in_frac) {
            if (++frac_digits > 3) {
                throw ConfigError("decimal \"" + text +
                                  "\" has more than 3 fractional digits");
            }
            frac = frac * 10 + (c - '0');
        } else {
            whole = whole * 10 + (c - '0');
            if (whole > 1000000000LL) {
                throw ConfigError("decimal \"" + text + "\" out of range");
            }
        }
    }
    if (!saw_digit) {
        throw ConfigError("invalid decimal \"" + text + "\"");
    }
    while (frac_digits < 3) {
        frac *= 10;
        ++frac_digits;
    }
    const std::int64_t milli = whole * 1000 + frac;
    return negative ? -milli : milli;
}

std::string format_milli(std::int64_t milli) {
    std::string sign = milli < 0 ? "-" : "";
    std::int64_t v = milli < 0 ? -milli : milli;
    std::string out = sign + std::to_string(v / 1000);
    std::int64_t frac = v % 1000;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03lld", static_cast<long long>(frac));
        std::string f(buf);
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig c;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected `key = value`, got \"" + stripped + "\"");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError("config key \"" + key + "\": empty value");
        }

        if (key == "t_fixed") {
            c.t_fixed = static_cast<int>(parse_int(key, value));
            check_range(key, c.t_fixed, 0, 255);
        } else if (key == "lambda") {
            c.lambda = static_cast<int>(parse_int(key, value));
            check_range(key, c.lambda, 0, 255);
        } else if (key == "block_size") {
            c.block_size = static_cast<int>(parse_int(key, value));
            if (c.block_size != 0) check_range(key, c.block_size, 2, 4096);
        } else if (key == "r_min") {
            c.r_min_milli = parse_milli(value);
        } else if (key == "r_max") {
            c.r_max_milli = parse_milli(value);
        } else if (key == "ra_min") {
            c.ra_min_milli = parse_milli(value);
        } else if (key == "ra_max") {
            c.ra_max_milli = parse_milli(value);
        } else if (key == "min_area") {
            c.min_area = parse_int(key, value);
            check_range(key, c.min_area, 0, std::int64_t{1} << 40);
        } else if (key == "line_thickness") {
            c.line_thickness = static_cast<int>(parse_int(key, value));
            check_range(key, c.line_thickness, 0, 1 << 16);
        } else if (key == "max_char_height") {
            c.max_char_height = static_cast<int>(parse_int(key, value));
            check_range(key, c.max_char_height, 0, 1 << 20);
        } else if (key == "fg_threshold") {
            c.fg_threshold = static_cast<int>(parse_int(key, value));
            check_range(key, c.fg_threshold, 1, 256);
        } else if (key == "black_threshold") {
            c.black_threshold = static_cast<int>(parse_int(key, value));
            check_range(key, c.black_threshold, 0, 255);
        } else if (key == "white_threshold") {
            c.white_threshold = static_cast<int>(parse_int(key, value));
            check_range(key, c.white_threshold, 1, 256);
        } else if (key == "min_run") {
            c.min_run = static_cast<int>(parse_int(key, value));
            check_range(key, c.min_run, 1, 1 << 16);
        } else if (key == "iou_min") {
            c.iou_min_milli = static_cast<int>(parse_milli(value));
            if (c.iou_min_milli <= 0 || c.iou_min_milli > 1000) {
                throw ConfigError("config key \"iou_min\": must lie in (0, 1]");
            }
        } else if (key == "mode") {
            if (value == "float") {
                c.mode = ArithmeticMode::Float;
            } else if (value == "integer") {
                c.mode = ArithmeticMode::Integer;
            } else {
                throw ConfigError("config key \"mode\": expected float or "
                                  "integer, got \"" + value + "\"");
            }
        } else {
            throw ConfigError("unknown config key \"" + key + "\" (line " +
                              std::to_string(line_no) + ")");
        }
    }
    if (c.r_min_milli >= c.r_max_milli) {
        throw ConfigError("config requires r_min < r_max");
    }
    if (c.ra_min_milli >= c.ra_max_milli) {
        throw ConfigError("config requires ra_min < ra_max");
    }
    return c;
}

std::string serialize_config(const PipelineConfig& c) {
    std::ostringstream os;
    os << "# background elimination\n"
       << "t_fixed = " << c.t_fixed << "\n"
       << "lambda = " << c.lambda << "\n"
       << "block_size = " << c.block_size << "\n"
       << "# text/graphics classifier\n"
       << "r_min = " << format_milli(c.r_min_milli) << "\n"
       << "r_max = " << format_milli(c.r_max_milli) << "\n"
       << "ra_min = " << format_milli(c.ra_min_milli) << "\n"
       << "ra_max = " << format_milli(c.ra_max_milli) << "\n"
       << "min_area = " << c.min_area << "\n"
       << "line_thickness = " << c.line_thickness << "\n"
       << "max_char_height = " << c.max_char_height << "\n"
       << "# intensity thresholds\n"
       << "fg_threshold = " << c.fg_threshold << "\n"
       << "black_threshold = " << c.black_threshold << "\n"
       << "white_threshold = " << c.white_threshold << "\n"
       << "min_run = " << c.min_run << "\n"
       << "# evaluation\n"
       << "iou_min = " << format_milli(c.iou_min_milli) << "\n"
       << "# arithmetic\n"
       << "mode = " << (c.mode == ArithmeticMode::Integer ? "integer" : "float")
       << "\n";
    return os.str();
}

PipelineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config \"" + path + "\"");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

int resolved_block_size(const PipelineConfig& c, int width, int height) {
    if (c.block_size != 0) {
        return c.block_size;
    }
    return default_block_size(width, height);
}

ClassifierParams resolved_classifier(const PipelineConfig& c, int width, int height) {
    ClassifierParams p;
    p.r_min_milli = c.r_min_milli;
    p.r_max_milli = c.r_max_milli;
    p.ra_min_milli = c.ra_min_milli;
    p.ra_max_milli = c.ra_max_milli;
    const std::int64_t area = static_cast<std::int64_t>(width) * height;
    p.min_area = c.min_area != 0 ? c.min_area : std::max<std::int64_t>(4, area / 50000);
    const int m = std::min(width, height);
    p.line_thickness = c.line_thickness != 0
                           ? c.line_thickness
                           : std::max(1, (6 * m + 768) / 1536); // round(3m/768)
    p.max_char_height = c.max_char_height != 0 ? c.max_char_height
                                               : std::max(1, height / 8);
    p.validate();
    return p;
}

} // namespace cardprep
