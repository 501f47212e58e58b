#include "ocr/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "ocr/kernels.hpp"

namespace ocr {

int otsu_threshold(const std::vector<long>& histogram) {
    long total = 0;
    double sum_all = 0;
    for (int i = 0; i < 256; i++) {
        total += histogram[i];
        sum_all += static_cast<double>(i) * histogram[i];
    }
    int occupied = 0;
    for (int i = 0; i < 256; i++) occupied += histogram[i] > 0;
    if (occupied <= 1) return -1;

    double sum_bg = 0;
    long w_bg = 0;
    double best_var = -1.0;
    int best_t = 0;
    for (int t = 0; t < 256; t++) {
        w_bg += histogram[t];
        if (w_bg == 0) continue;
        long w_fg = total - w_bg;
        if (w_fg == 0) break;
        sum_bg += static_cast<double>(t) * histogram[t];
        double mean_bg = sum_bg / w_bg;
        double mean_fg = (sum_all - sum_bg) / w_fg;
        double var = static_cast<double>(w_bg) * w_fg * (mean_bg - mean_fg) * (mean_bg - mean_fg);
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& img, const Config& cfg) {
    // Closing of a dark-ink/light-ground image erases strokes thinner than
    // the element, leaving the illumination field.
    GrayImage background = kernels::erode_square(kernels::dilate_square(img, cfg.se_halfwidth),
                                                 cfg.se_halfwidth);

    std::vector<std::uint8_t> residual(img.size());
    for (size_t i = 0; i < img.size(); i++) {
        int d = static_cast<int>(background.samples[i]) - static_cast<int>(img.samples[i]);
        residual[i] = static_cast<std::uint8_t>(std::clamp(d, 0, 255));
    }

    std::vector<long> hist(256, 0);
    for (std::uint8_t v : residual) hist[v]++;
    int t = otsu_threshold(hist);

    BinaryImage out(img.width, img.height);
    if (t < 0) return out; // degenerate histogram: all background
    for (size_t i = 0; i < img.size(); i++) out.mask[i] = residual[i] > t;
    return out;
}

BinaryImage median_filter(const BinaryImage& img) {
    return kernels::median3x3(img);
}

double estimate_pen(const BinaryImage& img) {
    long run_total = 0;
    long run_count = 0;
    for (int c = 0; c < img.width; c++) {
        int run = 0;
        for (int r = 0; r <= img.height; r++) {
            bool on = r < img.height && img.at(r, c);
            if (on) {
                run++;
            } else if (run) {
                run_total += run;
                run_count++;
                run = 0;
            }
        }
    }
    if (run_count == 0) throw Error(ErrorKind::EmptyImage, "estimate_pen: image has no ink");
    return static_cast<double>(run_total) / static_cast<double>(run_count);
}

Normalized normalize(const BinaryImage& img, const Config& cfg) {
    double pen = estimate_pen(img); // throws EmptyImage on blank input
    double scale = std::clamp(cfg.target_pen / pen, cfg.scale_clamp_min, cfg.scale_clamp_max);
    Normalized out;
    out.scale = scale;
    if (scale == 1.0) {
        out.image = img;
        return out;
    }
    int new_w = std::max(1, static_cast<int>(std::lround(img.width * scale)));
    int new_h = std::max(1, static_cast<int>(std::lround(img.height * scale)));
    out.image = kernels::resample_nn(img, new_w, new_h);
    return out;
}

} // namespace ocr
