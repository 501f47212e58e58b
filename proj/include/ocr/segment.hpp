#pragma once

#include <vector>

#include "ocr/config.hpp"
#include "ocr/raster.hpp"

namespace ocr {

struct Pixel {
    int row = 0;
    int col = 0;
    bool operator==(const Pixel&) const = default;
};

struct Box {
    int top = 0, left = 0, bottom = 0, right = 0; // inclusive
    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }
    bool operator==(const Box&) const = default;
};

struct RowBand {
    int top = 0;
    int bottom = 0;    // inclusive
    int baseline = -1; // absolute row, filled by detect_baseline
};

struct Component {
    std::vector<Pixel> pixels; // sorted row-major
    Box box;
    long area = 0;

    double centroid_row() const;
    double centroid_col() const;
};

struct DotCluster {
    double centroid_row = 0;
    double centroid_col = 0;
    int count = 1;           // 1..3
    bool above = true;       // above the baseline
};

struct SubWord {
    Component body;
    std::vector<Component> attached; // candidate dot components
    std::vector<DotCluster> dots;    // filled by classify_dots
    int band_index = -1;
    int left = 0, right = 0;         // column range of the body
};

// Maximal runs of rows with nonzero horizontal projection; consecutive bands
// whose gap is below band_merge * median band height are merged so detached
// marks stay with their row. Empty page -> empty list.
std::vector<RowBand> split_rows(const BinaryImage& page, const Config& cfg);

// All maximal 8-connected ink components, ordered by their first pixel in
// row-major order.
std::vector<Component> connected_components(const BinaryImage& img);

// Argmax of the horizontal projection inside [band.top, band.bottom]; ties
// break toward the bottom-most row. Throws EmptyBand when the band is blank.
int detect_baseline(const BinaryImage& page, const RowBand& band);

// Components with area >= theta become sub-word bodies; the rest attach to
// the body with the largest column-range overlap (none overlapping: nearest
// centroid column). Sub-words are sorted right to left by right edge.
// If no component reaches theta the largest one is promoted.
std::vector<SubWord> split_subwords(const std::vector<Component>& comps, double theta);

// Dot count from area and aspect ratio relative to the pen thickness,
// placement from the cluster centroid against the band baseline.
std::vector<DotCluster> classify_dots(const SubWord& sub, double pen, int baseline,
                                      const Config& cfg);

} // namespace ocr
