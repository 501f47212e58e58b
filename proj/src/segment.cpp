#include "ocr/segment.hpp"

#include <algorithm>
#include <cmath>

#include "ocr/kernels.hpp"

namespace ocr {

double Component::centroid_row() const {
    double s = 0;
    for (const Pixel& p : pixels) s += p.row;
    return s / static_cast<double>(pixels.size());
}

double Component::centroid_col() const {
    double s = 0;
    for (const Pixel& p : pixels) s += p.col;
    return s / static_cast<double>(pixels.size());
}

std::vector<RowBand> split_rows(const BinaryImage& page, const Config& cfg) {
    Projection proj = kernels::horizontal_projection(page);
    std::vector<RowBand> bands;
    int start = -1;
    for (int r = 0; r <= page.height; r++) {
        bool on = r < page.height && proj.counts[r] > 0;
        if (on && start < 0) start = r;
        if (!on && start >= 0) {
            bands.push_back({start, r - 1, -1});
            start = -1;
        }
    }
    if (bands.size() < 2) return bands;

    std::vector<int> heights;
    heights.reserve(bands.size());
    for (const RowBand& b : bands) heights.push_back(b.bottom - b.top + 1);
    std::sort(heights.begin(), heights.end());
    double median;
    size_t n = heights.size();
    if (n % 2) median = heights[n / 2];
    else median = (heights[n / 2 - 1] + heights[n / 2]) / 2.0;

    std::vector<RowBand> merged;
    merged.push_back(bands[0]);
    for (size_t i = 1; i < bands.size(); i++) {
        int gap = bands[i].top - merged.back().bottom - 1;
        if (gap < cfg.band_merge * median) merged.back().bottom = bands[i].bottom;
        else merged.push_back(bands[i]);
    }
    return merged;
}

std::vector<Component> connected_components(const BinaryImage& img) {
    int count = 0;
    std::vector<int> labels = kernels::label_components(img, &count);
    std::vector<Component> comps(count);
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            int l = labels[static_cast<size_t>(r) * img.width + c];
            if (!l) continue;
            Component& comp = comps[l - 1];
            if (comp.pixels.empty()) comp.box = {r, c, r, c};
            else {
                comp.box.top = std::min(comp.box.top, r);
                comp.box.left = std::min(comp.box.left, c);
                comp.box.bottom = std::max(comp.box.bottom, r);
                comp.box.right = std::max(comp.box.right, c);
            }
            comp.pixels.push_back({r, c});
        }
    }
    for (Component& c : comps) c.area = static_cast<long>(c.pixels.size());
    return comps;
}

int detect_baseline(const BinaryImage& page, const RowBand& band) {
    Projection proj = kernels::horizontal_projection(page);
    long best = 0;
    int best_row = -1;
    for (int r = band.top; r <= band.bottom && r < page.height; r++) {
        if (proj.counts[r] >= best && proj.counts[r] > 0) { // >= keeps bottom-most tie
            best = proj.counts[r];
            best_row = r;
        }
    }
    if (best_row < 0) throw Error(ErrorKind::EmptyBand, "detect_baseline: band has no ink");
    return best_row;
}

namespace {

int col_overlap(const Box& a, const Box& b) {
    return std::min(a.right, b.right) - std::max(a.left, b.left) + 1;
}

} // namespace

std::vector<SubWord> split_subwords(const std::vector<Component>& comps, double theta) {
    if (comps.empty()) return {};

    std::vector<int> body_idx;
    for (size_t i = 0; i < comps.size(); i++)
        if (static_cast<double>(comps[i].area) >= theta) body_idx.push_back(static_cast<int>(i));

    if (body_idx.empty()) {
        // All components are small: promote the largest (first on ties).
        int best = 0;
        for (size_t i = 1; i < comps.size(); i++)
            if (comps[i].area > comps[best].area) best = static_cast<int>(i);
        body_idx.push_back(best);
    }

    std::vector<SubWord> subs(body_idx.size());
    for (size_t s = 0; s < body_idx.size(); s++) {
        subs[s].body = comps[body_idx[s]];
        subs[s].left = subs[s].body.box.left;
        subs[s].right = subs[s].body.box.right;
    }

    for (size_t i = 0; i < comps.size(); i++) {
        if (std::find(body_idx.begin(), body_idx.end(), static_cast<int>(i)) != body_idx.end())
            continue;
        const Component& comp = comps[i];
        // Largest column overlap wins; otherwise the nearest centroid column.
        int best = -1;
        int best_overlap = 0;
        for (size_t s = 0; s < subs.size(); s++) {
            int ov = col_overlap(comp.box, subs[s].body.box);
            if (ov > best_overlap) {
                best_overlap = ov;
                best = static_cast<int>(s);
            }
        }
        if (best < 0) {
            double best_dist = 0;
            for (size_t s = 0; s < subs.size(); s++) {
                double d = std::abs(comp.centroid_col() - subs[s].body.centroid_col());
                if (best < 0 || d < best_dist) {
                    best_dist = d;
                    best = static_cast<int>(s);
                }
            }
        }
        subs[best].attached.push_back(comp);
        subs[best].left = std::min(subs[best].left, comp.box.left);
        subs[best].right = std::max(subs[best].right, comp.box.right);
    }

    std::sort(subs.begin(), subs.end(), [](const SubWord& a, const SubWord& b) {
        if (a.body.box.right != b.body.box.right) return a.body.box.right > b.body.box.right;
        return a.body.box.top < b.body.box.top;
    });
    return subs;
}

std::vector<DotCluster> classify_dots(const SubWord& sub, double pen, int baseline,
                                      const Config& cfg) {
    std::vector<DotCluster> dots;
    const double pen2 = std::max(1.0, pen * pen);
    for (const Component& comp : sub.attached) {
        double a = static_cast<double>(comp.area) / pen2;
        double r = static_cast<double>(comp.box.width()) / static_cast<double>(comp.box.height());
        DotCluster d;
        if (r >= cfg.dot_ratio && a < cfg.dot_area2) d.count = 2;
        else if (a < cfg.dot_area1 && r < cfg.dot_ratio) d.count = 1;
        else d.count = 3;
        d.centroid_row = comp.centroid_row();
        d.centroid_col = comp.centroid_col();
        d.above = d.centroid_row < baseline;
        dots.push_back(d);
    }
    return dots;
}

} // namespace ocr
