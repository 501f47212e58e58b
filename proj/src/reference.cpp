#include "ocr/reference.hpp"

#include <algorithm>

namespace ocr::reference {

GrayImage dilate_square(const GrayImage& img, int halfwidth) {
    GrayImage out(img.width, img.height);
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            std::uint8_t m = 0;
            for (int dr = -halfwidth; dr <= halfwidth; dr++) {
                int rr = r + dr;
                if (rr < 0 || rr >= img.height) continue;
                for (int dc = -halfwidth; dc <= halfwidth; dc++) {
                    int cc = c + dc;
                    if (cc < 0 || cc >= img.width) continue;
                    m = std::max(m, img.at(rr, cc));
                }
            }
            out.at(r, c) = m;
        }
    }
    return out;
}

GrayImage erode_square(const GrayImage& img, int halfwidth) {
    GrayImage out(img.width, img.height);
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            std::uint8_t m = 255;
            for (int dr = -halfwidth; dr <= halfwidth; dr++) {
                int rr = r + dr;
                if (rr < 0 || rr >= img.height) continue;
                for (int dc = -halfwidth; dc <= halfwidth; dc++) {
                    int cc = c + dc;
                    if (cc < 0 || cc >= img.width) continue;
                    m = std::min(m, img.at(rr, cc));
                }
            }
            out.at(r, c) = m;
        }
    }
    return out;
}

BinaryImage median3x3(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
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
    for (int r = 0; r < img.height; r++)
        for (int c = 0; c < img.width; c++)
            p.counts[r] += img.at(r, c) != 0;
    return p;
}

Projection vertical_projection(const BinaryImage& img) {
    Projection p;
    p.counts.assign(img.width, 0);
    for (int r = 0; r < img.height; r++)
        for (int c = 0; c < img.width; c++)
            p.counts[c] += img.at(r, c) != 0;
    return p;
}

BinaryImage resample_nn(const BinaryImage& img, int new_w, int new_h) {
    BinaryImage out(new_w, new_h);
    const double sr = static_cast<double>(new_h) / img.height;
    const double sc = static_cast<double>(new_w) / img.width;
    for (int r = 0; r < new_h; r++) {
        int src_r = std::min(img.height - 1, static_cast<int>((r + 0.5) / sr));
        for (int c = 0; c < new_w; c++) {
            int src_c = std::min(img.width - 1, static_cast<int>((c + 0.5) / sc));
            out.at(r, c) = img.at(src_r, src_c);
        }
    }
    return out;
}

std::vector<int> label_components_flood(const BinaryImage& img, int* out_count) {
    std::vector<int> labels(img.size(), 0);
    int next = 0;
    std::vector<int> stack;
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t idx = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[idx] || labels[idx]) continue;
            next++;
            labels[idx] = next;
            stack.push_back(static_cast<int>(idx));
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                int cr = cur / img.width, cc = cur % img.width;
                for (int dr = -1; dr <= 1; dr++) {
                    for (int dc = -1; dc <= 1; dc++) {
                        if (!dr && !dc) continue;
                        int nr = cr + dr, nc = cc + dc;
                        if (!img.in_bounds(nr, nc)) continue;
                        size_t nidx = static_cast<size_t>(nr) * img.width + nc;
                        if (img.mask[nidx] && !labels[nidx]) {
                            labels[nidx] = next;
                            stack.push_back(static_cast<int>(nidx));
                        }
                    }
                }
            }
        }
    }
    if (out_count) *out_count = next;
    return labels;
}

} // namespace ocr::reference
