#include "ocr/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace ocr::kernels {

namespace {

// Sliding-window running max/min over one axis (van Herk style two-scan).
// Exact, so the separable composition equals the full-window reference.
template <typename Cmp>
void run_window_rows(const GrayImage& in, GrayImage& out, int hw, Cmp cmp, std::uint8_t id) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < in.height; r++) {
        const std::uint8_t* src = in.samples.data() + static_cast<size_t>(r) * in.width;
        std::uint8_t* dst = out.samples.data() + static_cast<size_t>(r) * in.width;
        for (int c = 0; c < in.width; c++) {
            std::uint8_t m = id;
            int lo = std::max(0, c - hw), hi = std::min(in.width - 1, c + hw);
            for (int k = lo; k <= hi; k++) m = cmp(m, src[k]);
            dst[c] = m;
        }
    }
}

template <typename Cmp>
void run_window_cols(const GrayImage& in, GrayImage& out, int hw, Cmp cmp, std::uint8_t id) {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < in.width; c++) {
        for (int r = 0; r < in.height; r++) {
            std::uint8_t m = id;
            int lo = std::max(0, r - hw), hi = std::min(in.height - 1, r + hw);
            for (int k = lo; k <= hi; k++) m = cmp(m, in.at(k, c));
            out.at(r, c) = m;
        }
    }
}

} // namespace

GrayImage dilate_square(const GrayImage& img, int halfwidth) {
    GrayImage tmp(img.width, img.height), out(img.width, img.height);
    auto mx = [](std::uint8_t a, std::uint8_t b) { return std::max(a, b); };
    run_window_rows(img, tmp, halfwidth, mx, 0);
    run_window_cols(tmp, out, halfwidth, mx, 0);
    return out;
}

GrayImage erode_square(const GrayImage& img, int halfwidth) {
    GrayImage tmp(img.width, img.height), out(img.width, img.height);
    auto mn = [](std::uint8_t a, std::uint8_t b) { return std::min(a, b); };
    run_window_rows(img, tmp, halfwidth, mn, 255);
    run_window_cols(tmp, out, halfwidth, mn, 255);
    return out;
}

BinaryImage median3x3(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            int n = 0;
            for (int dr = -1; dr <= 1; dr++)
                for (int dc = -1; dc <= 1; dc++)
                    n += img.ink(r + dr, c + dc);
            out.at(r, c) = n >= 5;
        }
    }
    return out;
}

Projection horizontal_projection(const BinaryImage& img) {
    Projection p;
    p.counts.assign(img.height, 0);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < img.height; r++) {
        long n = 0;
        const std::uint8_t* row = img.mask.data() + static_cast<size_t>(r) * img.width;
        for (int c = 0; c < img.width; c++) n += row[c] != 0;
        p.counts[r] = n;
    }
    return p;
}

Projection vertical_projection(const BinaryImage& img) {
    Projection p;
    p.counts.assign(img.width, 0);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < img.width; c++) {
        long n = 0;
        for (int r = 0; r < img.height; r++) n += img.at(r, c) != 0;
        p.counts[c] = n;
    }
    return p;
}

BinaryImage resample_nn(const BinaryImage& img, int new_w, int new_h) {
    BinaryImage out(new_w, new_h);
    const double sr = static_cast<double>(new_h) / img.height;
    const double sc = static_cast<double>(new_w) / img.width;
    // Precompute the column map once; it is shared by all rows.
    std::vector<int> cmap(new_w);
    for (int c = 0; c < new_w; c++)
        cmap[c] = std::min(img.width - 1, static_cast<int>((c + 0.5) / sc));
#pragma omp parallel for schedule(static)
    for (int r = 0; r < new_h; r++) {
        int src_r = std::min(img.height - 1, static_cast<int>((r + 0.5) / sr));
        const std::uint8_t* src = img.mask.data() + static_cast<size_t>(src_r) * img.width;
        std::uint8_t* dst = out.mask.data() + static_cast<size_t>(r) * new_w;
        for (int c = 0; c < new_w; c++) dst[c] = src[cmap[c]];
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<int> label_components(const BinaryImage& img, int* out_count) {
    // Classic two-pass: provisional labels with a union-find over the four
    // already-visited 8-neighbors, then renumber in first-appearance order.
    std::vector<int> labels(img.size(), 0);
    UnionFind uf(1);
    int provisional = 0;

    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t idx = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[idx]) continue;
            int best = 0;
            const int prev[4][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}};
            int seen[4];
            int nseen = 0;
            for (auto& d : prev) {
                int nr = r + d[0], nc = c + d[1];
                if (!img.in_bounds(nr, nc)) continue;
                int l = labels[static_cast<size_t>(nr) * img.width + nc];
                if (l) {
                    seen[nseen++] = l;
                    if (!best || l < best) best = l;
                }
            }
            if (!best) {
                provisional++;
                uf.parent.push_back(provisional);
                labels[idx] = provisional;
            } else {
                labels[idx] = best;
                for (int i = 0; i < nseen; i++) uf.unite(best, seen[i]);
            }
        }
    }

    // Renumber roots in row-major order of first occurrence.
    std::vector<int> remap(provisional + 1, 0);
    int next = 0;
    for (size_t i = 0; i < labels.size(); i++) {
        if (!labels[i]) continue;
        int root = uf.find(labels[i]);
        if (!remap[root]) remap[root] = ++next;
        labels[i] = remap[root];
    }
    if (out_count) *out_count = next;
    return labels;
}

} // namespace ocr::kernels
