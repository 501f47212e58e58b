#pragma once

#include <optional>
#include <string>

#include "ocr/errors.hpp"

namespace ocr {

// Every empirical constant in the pipeline lives here so it can be audited,
// overridden in a config file, or overridden again on the command line.
struct Config {
    // preprocess
    int se_halfwidth = 15;      // background closing element is a square of side 2*h+1
    double target_pen = 4.0;    // normalization target for the mean vertical run
    double scale_clamp_min = 0.25;
    double scale_clamp_max = 4.0;

    // segment
    double band_merge = 0.2;    // merge row bands whose gap < band_merge * median height
    double theta_factor = 3.0;  // sub-word body threshold = theta_factor * pen^2
    double dot_area1 = 2.5;     // single dot: area/pen^2 below this ...
    double dot_ratio = 1.6;     // ... and aspect ratio below this
    double dot_area2 = 5.0;     // double dot: ratio >= dot_ratio and area/pen^2 below this

    // skeleton
    int spur_len = 2;           // strokes with fewer interior pixels are dropped

    // primitive
    int min_support = 3;        // minimum pixels per fitted line segment
    double residual = 1.0;      // max pixel-to-line distance counted as support
    double min_box_span = 4.0;  // minimum middle-segment length of a C/U box

    // recognize / output
    double spacing = 1.5;       // space between sub-words when gap > spacing * median gap

    // paths & execution
    std::string civ_db_path = "data/civ.txt";
    std::optional<std::string> dump_dir;
    int jobs = 1;

    // Parse `key = value` lines from a config file; '#' comments allowed.
    // Unknown keys are rejected.
    void load_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    std::string print() const;
};

} // namespace ocr
