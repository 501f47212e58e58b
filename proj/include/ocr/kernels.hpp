#pragma once

#include "ocr/raster.hpp"

// OpenMP implementations of the pixel kernels. Each one is required to be
// bit-identical to its ocr::reference counterpart for any thread count; the
// square morphology uses a separable row/column decomposition, which is exact
// for max and min.

namespace ocr::kernels {

GrayImage dilate_square(const GrayImage& img, int halfwidth);
GrayImage erode_square(const GrayImage& img, int halfwidth);

BinaryImage median3x3(const BinaryImage& img);

Projection horizontal_projection(const BinaryImage& img);
Projection vertical_projection(const BinaryImage& img);

BinaryImage resample_nn(const BinaryImage& img, int new_w, int new_h);

// Two-pass union-find connected-component labeling (8-connectivity), labels
// renumbered in row-major order of first appearance, starting at 1.
std::vector<int> label_components(const BinaryImage& img, int* out_count);

} // namespace ocr::kernels
