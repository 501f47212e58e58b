#pragma once

#include "ocr/config.hpp"
#include "ocr/raster.hpp"

namespace ocr {

// Scanned page -> clean, size-normalized binary image.
//
// Binarization estimates the illumination field with a grayscale closing
// (square element, side 2*se_halfwidth+1), thresholds the residual
// background-minus-sample with Otsu, and marks residual > threshold as ink.
// A flat residual histogram yields an all-background image.
BinaryImage binarize(const GrayImage& img, const Config& cfg);

// 3x3 binary median (majority of the 9-neighborhood, background border).
BinaryImage median_filter(const BinaryImage& img);

// Mean length of maximal vertical ink runs over all columns.
// Throws EmptyImage when there is no ink.
double estimate_pen(const BinaryImage& img);

struct Normalized {
    BinaryImage image;
    double scale = 1.0;
};

// Uniform nearest-neighbor rescale so the mean vertical run approaches
// cfg.target_pen; the factor is clamped to [scale_clamp_min, scale_clamp_max].
Normalized normalize(const BinaryImage& img, const Config& cfg);

// Otsu threshold over a 256-bin histogram (exposed for tests).
// Returns -1 when the histogram has a single occupied bin.
int otsu_threshold(const std::vector<long>& histogram);

} // namespace ocr
