#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocr/errors.hpp"

namespace ocr {

// All rasters are row-major, origin at top-left, coordinates (row, col).

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples; // luminance 0..255

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255)
        : width(w), height(h), samples(static_cast<size_t>(w) * h, fill) {}

    std::uint8_t at(int r, int c) const { return samples[static_cast<size_t>(r) * width + c]; }
    std::uint8_t& at(int r, int c) { return samples[static_cast<size_t>(r) * width + c]; }
    size_t size() const { return samples.size(); }

    bool operator==(const GrayImage&) const = default;
};

struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask; // 1 = ink, 0 = background

    BinaryImage() = default;
    BinaryImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), mask(static_cast<size_t>(w) * h, fill) {}

    std::uint8_t at(int r, int c) const { return mask[static_cast<size_t>(r) * width + c]; }
    std::uint8_t& at(int r, int c) { return mask[static_cast<size_t>(r) * width + c]; }
    bool in_bounds(int r, int c) const { return r >= 0 && r < height && c >= 0 && c < width; }
    // Ink flag with background padding outside the image.
    bool ink(int r, int c) const { return in_bounds(r, c) && mask[static_cast<size_t>(r) * width + c] != 0; }
    size_t size() const { return mask.size(); }

    long ink_count() const {
        long n = 0;
        for (std::uint8_t v : mask) n += v != 0;
        return n;
    }

    bool operator==(const BinaryImage&) const = default;
};

struct Projection {
    std::vector<long> counts;
};

// PGM (P5 binary / P2 ASCII) with maxval up to 255. '#' comments allowed in the header.
GrayImage load_pgm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

GrayImage load_pgm_file(const std::string& path);
void save_pgm_file(const GrayImage& img, const std::string& path);

// Debug helper: binary mask rendered as black-on-white grayscale.
GrayImage to_gray(const BinaryImage& img);

Projection horizontal_projection(const BinaryImage& img); // counts per row
Projection vertical_projection(const BinaryImage& img);   // counts per column

} // namespace ocr
