#pragma once

#include <vector>

#include "ocr/raster.hpp"
#include "ocr/segment.hpp"

namespace ocr {

struct Skeleton {
    BinaryImage image;
    int origin_row = 0; // offset of image(0,0) in page coordinates
    int origin_col = 0;
};

enum class NodeKind { Endpoint, Branch };

struct SkeletonNode {
    int id = -1;
    NodeKind kind = NodeKind::Endpoint;
    std::vector<Pixel> pixels; // branch nodes may be a small coalesced cluster
    Pixel anchor;              // representative pixel (row-major smallest)
};

struct SkeletonEdge {
    int id = -1;
    int node_a = -1;
    int node_b = -1;
    std::vector<Pixel> path; // ordered, includes the terminal node pixels
    size_t interior() const { return path.size() >= 2 ? path.size() - 2 : 0; }
};

struct SkeletonGraph {
    std::vector<SkeletonNode> nodes;
    std::vector<SkeletonEdge> edges;
    std::vector<std::vector<Pixel>> cycles; // closed pixel paths with no nodes
};

struct ClosedCurve {
    double centroid_row = 0;
    double centroid_col = 0;
    std::vector<Pixel> pixels;
    Box box;
};

struct Stroke {
    std::vector<Pixel> path; // oriented so path.front() is the right-most end
    size_t interior = 0;     // pixels between the terminal nodes
};

// Iterated parallel deletion of simple contour pixels over four pixel
// subfields until a fixpoint, followed by a 2x2-square cleanup. Preserves the
// 8-connected component count, converges to unit width, and is idempotent.
Skeleton thin(const BinaryImage& body);

// Classify skeleton pixels by ink-neighbor count (1 = endpoint, >=3 = branch;
// 8-adjacent branch pixels coalesce into one node), walk the paths between
// nodes, and collect the residual closed walks as cycles.
SkeletonGraph build_graph(const Skeleton& sk);

// Reports every closed curve (pure pixel cycles, self-loop edges, and the
// independent cycles of the node multigraph) and removes the cyclic edges
// from the graph. Nodes that keep at least one edge survive.
std::vector<ClosedCurve> detect_closed_curves(SkeletonGraph& g);

// One stroke per remaining edge, ordered right to left by right-most pixel.
// Strokes with fewer than spur_len interior pixels are dropped as thinning
// artifacts.
std::vector<Stroke> extract_strokes(const SkeletonGraph& g, int spur_len);

// Number of ink neighbors of (r, c) in the 8-neighborhood.
int neighbor_count(const BinaryImage& img, int r, int c);

// True when deleting the pixel preserves local topology (single 8-connected
// ink component in the punctured neighborhood and a single 4-connected
// background component touching an edge-neighbor).
bool is_simple_pixel(const BinaryImage& img, int r, int c);

// Cycle rank |E| - |V| + |components| of the pixel adjacency graph
// (vertices = ink pixels, edges = 8-adjacent ink pairs). Oracle for
// detect_closed_curves.
long pixel_cycle_rank(const BinaryImage& img);

} // namespace ocr
