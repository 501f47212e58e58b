#pragma once

#include <string>
#include <vector>

#include "ocr/config.hpp"
#include "ocr/skeleton.hpp"

namespace ocr {

// Line slopes are quantized to 22.5-degree steps: index k means k * 22.5.
struct QuantAngle {
    int index = 0; // 0..7
    double degrees() const { return index * 22.5; }
};

struct LineSegment {
    QuantAngle angle;
    Pixel p0, p1;        // endpoints on supported stroke pixels, path order
    int support = 0;     // pixels within `residual` of the carrier line
    int first_path_idx = 0;
    std::vector<Pixel> pixels; // supporting pixels (incl. merged leftovers)
};

enum class PrimitiveCode : char {
    Backslash = 'B',
    Slash = 'S',
    Vertical = 'V',
    Horizontal = 'H',
    CShape = 'C',
    UShape = 'U',
    Circle = 'O',
    Corner = 'L',
};

char code_char(PrimitiveCode c);
PrimitiveCode code_from_char(char c); // throws UnknownCode

// Greedy quantized Hough: repeatedly take the (angle, offset) cell with the
// most unassigned support, peel its pixels into a segment, stop when the
// remainder cannot support a segment, and fold the leftovers into their
// nearest segment. Segments come back ordered along the stroke path.
std::vector<LineSegment> fit_lines(const Stroke& s, const Config& cfg);

// Table-driven mapping from an ordered segment chain to primitive codes:
//   R0  deleted closed curve            -> O
//   R1  single segment by angle         -> V / H / S / B
//   R2  near-perpendicular pair         -> L
//   R3  open three-sided box            -> C (opens right) / U (opens up)
//   R4  longer chains: greedy R3/R2 windows scanned along the order
std::vector<PrimitiveCode> classify(const std::vector<LineSegment>& segments, bool from_cycle,
                                    const Config& cfg);

std::vector<PrimitiveCode> stroke_to_primitives(const Stroke& s, const Config& cfg);

std::string codes_to_string(const std::vector<PrimitiveCode>& codes); // "L|L|U"

} // namespace ocr
