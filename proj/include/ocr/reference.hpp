#pragma once

#include "ocr/raster.hpp"

// Straight-line serial definitions of every pixel kernel. These are the
// semantics of record: the OpenMP kernels in ocr::kernels must match them
// bit for bit, and the tests hold them to that. Keep these dumb and obvious.

namespace ocr::reference {

// Grayscale dilation (max) over a flat square structuring element of side
// 2*halfwidth+1, clamped at the borders.
GrayImage dilate_square(const GrayImage& img, int halfwidth);

// Grayscale erosion (min), same element.
GrayImage erode_square(const GrayImage& img, int halfwidth);

// 3x3 binary median: majority of the 9-neighborhood, borders padded with
// background.
BinaryImage median3x3(const BinaryImage& img);

Projection horizontal_projection(const BinaryImage& img);
Projection vertical_projection(const BinaryImage& img);

// Nearest-neighbor resample to (new_w, new_h); source pixel for output (r,c)
// is floor((r+0.5)/sr), floor((c+0.5)/sc) with sr = new_h/h, sc = new_w/w.
BinaryImage resample_nn(const BinaryImage& img, int new_w, int new_h);

// 8-connected component labeling by explicit-stack flood fill. Labels are
// assigned in row-major order of each component's first pixel, starting at 1;
// background stays 0. Used both as the reference kernel and as the oracle for
// the production labeling.
std::vector<int> label_components_flood(const BinaryImage& img, int* out_count);

} // namespace ocr::reference
