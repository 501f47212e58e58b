#include "ocr/skeleton.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace ocr {

namespace {

// Neighborhood bit order (bit k set = ink at offset NB[k]).
constexpr int NB[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};

int popcount8(unsigned m) { return __builtin_popcount(m & 0xffu); }

// 256-entry deletion-safety table. A pixel is simple iff the ink cells of its
// punctured 3x3 neighborhood form one 8-connected set and the background
// cells form one 4-connected set containing an edge-neighbor of the center.
struct SimpleLut {
    std::array<bool, 256> simple{};

    SimpleLut() {
        for (unsigned m = 0; m < 256; m++) simple[m] = compute(m);
    }

    static bool adjacent8(int a, int b) {
        return std::abs(NB[a][0] - NB[b][0]) <= 1 && std::abs(NB[a][1] - NB[b][1]) <= 1;
    }
    static bool adjacent4(int a, int b) {
        return std::abs(NB[a][0] - NB[b][0]) + std::abs(NB[a][1] - NB[b][1]) == 1;
    }

    static bool compute(unsigned m) {
        if (popcount8(m) == 0) return false;
        // ink components under 8-adjacency
        int comp[8];
        std::fill(comp, comp + 8, -1);
        int ink_comps = 0;
        for (int i = 0; i < 8; i++) {
            if (!((m >> i) & 1) || comp[i] >= 0) continue;
            // BFS over ink cells
            int stack[8], sp = 0;
            stack[sp++] = i;
            comp[i] = ink_comps;
            while (sp) {
                int cur = stack[--sp];
                for (int j = 0; j < 8; j++) {
                    if (((m >> j) & 1) && comp[j] < 0 && adjacent8(cur, j)) {
                        comp[j] = ink_comps;
                        stack[sp++] = j;
                    }
                }
            }
            ink_comps++;
        }
        if (ink_comps != 1) return false;

        // background components under 4-adjacency, counted only when they
        // contain one of the N/W/E/S positions (indices 1,3,4,6)
        int bcomp[8];
        std::fill(bcomp, bcomp + 8, -1);
        int bg_comps = 0;
        for (int i = 0; i < 8; i++) {
            if (((m >> i) & 1) || bcomp[i] >= 0) continue;
            int stack[8], sp = 0;
            stack[sp++] = i;
            bcomp[i] = bg_comps;
            bool touches_edge = i == 1 || i == 3 || i == 4 || i == 6;
            while (sp) {
                int cur = stack[--sp];
                for (int j = 0; j < 8; j++) {
                    if (!((m >> j) & 1) && bcomp[j] < 0 && adjacent4(cur, j)) {
                        bcomp[j] = bg_comps;
                        if (j == 1 || j == 3 || j == 4 || j == 6) touches_edge = true;
                        stack[sp++] = j;
                    }
                }
            }
            if (touches_edge) bg_comps++;
        }
        return bg_comps == 1;
    }
};

const SimpleLut& lut() {
    static const SimpleLut t;
    return t;
}

unsigned neighborhood_mask(const BinaryImage& img, int r, int c) {
    unsigned m = 0;
    for (int k = 0; k < 8; k++)
        if (img.ink(r + NB[k][0], c + NB[k][1])) m |= 1u << k;
    return m;
}

} // namespace

int neighbor_count(const BinaryImage& img, int r, int c) {
    return popcount8(neighborhood_mask(img, r, c));
}

bool is_simple_pixel(const BinaryImage& img, int r, int c) {
    return lut().simple[neighborhood_mask(img, r, c)];
}

Skeleton thin(const BinaryImage& body) {
    Skeleton sk;
    sk.image = body;
    BinaryImage& img = sk.image;
    if (img.ink_count() == 0) return sk;

    // Pixels of one subfield ((r%2, c%2) class) are never 8-adjacent, so
    // deleting all simple non-endpoint pixels of a subfield in parallel is
    // equivalent to deleting them one at a time and keeps topology intact.
    std::vector<std::uint8_t> kill(img.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int sub = 0; sub < 4; sub++) {
            const int r0 = sub >> 1, c0 = sub & 1;
            bool any = false;
#pragma omp parallel for schedule(static) reduction(||: any)
            for (int r = r0; r < img.height; r += 2) {
                for (int c = c0; c < img.width; c += 2) {
                    size_t idx = static_cast<size_t>(r) * img.width + c;
                    if (!img.mask[idx]) continue;
                    unsigned m = neighborhood_mask(img, r, c);
                    if (popcount8(m) >= 2 && lut().simple[m]) {
                        kill[idx] = 1;
                        any = true;
                    }
                }
            }
            if (any) {
                changed = true;
#pragma omp parallel for schedule(static)
                for (int r = r0; r < img.height; r += 2) {
                    for (int c = c0; c < img.width; c += 2) {
                        size_t idx = static_cast<size_t>(r) * img.width + c;
                        if (kill[idx]) {
                            img.mask[idx] = 0;
                            kill[idx] = 0;
                        }
                    }
                }
            }
        }

        // Residual 2x2 squares: delete one simple pixel per square,
        // sequentially (safe) in scan order, until none remain.
        for (int r = 0; r + 1 < img.height; r++) {
            for (int c = 0; c + 1 < img.width; c++) {
                if (!(img.at(r, c) && img.at(r, c + 1) && img.at(r + 1, c) &&
                      img.at(r + 1, c + 1)))
                    continue;
                const int cand[4][2] = {{r, c}, {r, c + 1}, {r + 1, c}, {r + 1, c + 1}};
                for (auto& p : cand) {
                    if (is_simple_pixel(img, p[0], p[1])) {
                        img.at(p[0], p[1]) = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return sk;
}

namespace {

struct GraphScratch {
    const BinaryImage& img;
    std::vector<int> node_of;  // pixel index -> node id, -1 otherwise
    std::vector<std::uint8_t> visited;

    explicit GraphScratch(const BinaryImage& i)
        : img(i), node_of(i.size(), -1), visited(i.size(), 0) {}

    size_t idx(const Pixel& p) const { return static_cast<size_t>(p.row) * img.width + p.col; }
};

} // namespace

SkeletonGraph build_graph(const Skeleton& sk) {
    const BinaryImage& img = sk.image;
    SkeletonGraph g;
    if (img.size() == 0) return g;

    std::vector<int> degree(img.size(), 0);
    for (int r = 0; r < img.height; r++)
        for (int c = 0; c < img.width; c++)
            if (img.at(r, c)) degree[static_cast<size_t>(r) * img.width + c] = neighbor_count(img, r, c);

    GraphScratch gs(img);

    // Branch clusters: coalesce 8-adjacent pixels of degree >= 3.
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t i = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[i] || degree[i] < 3 || gs.node_of[i] >= 0) continue;
            SkeletonNode node;
            node.id = static_cast<int>(g.nodes.size());
            node.kind = NodeKind::Branch;
            std::vector<Pixel> stack{{r, c}};
            gs.node_of[i] = node.id;
            while (!stack.empty()) {
                Pixel p = stack.back();
                stack.pop_back();
                node.pixels.push_back(p);
                for (auto& d : NB) {
                    Pixel q{p.row + d[0], p.col + d[1]};
                    if (!img.ink(q.row, q.col)) continue;
                    size_t qi = gs.idx(q);
                    if (degree[qi] >= 3 && gs.node_of[qi] < 0) {
                        gs.node_of[qi] = node.id;
                        stack.push_back(q);
                    }
                }
            }
            std::sort(node.pixels.begin(), node.pixels.end(), [](const Pixel& a, const Pixel& b) {
                return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
            node.anchor = node.pixels.front();
            g.nodes.push_back(std::move(node));
        }
    }

    // Endpoints (degree 1) and isolated pixels (degree 0) are single-pixel nodes.
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t i = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[i] || degree[i] >= 2) continue;
            SkeletonNode node;
            node.id = static_cast<int>(g.nodes.size());
            node.kind = NodeKind::Endpoint;
            node.pixels = {{r, c}};
            node.anchor = node.pixels.front();
            gs.node_of[i] = node.id;
            g.nodes.push_back(std::move(node));
        }
    }

    // Walk edges from every node pixel through degree-2 pixels.
    std::set<std::pair<size_t, size_t>> direct; // de-duped node-to-node contacts
    for (const SkeletonNode& node : g.nodes) {
        for (const Pixel& np : node.pixels) {
            for (auto& d : NB) {
                Pixel q{np.row + d[0], np.col + d[1]};
                if (!img.ink(q.row, q.col)) continue;
                size_t qi = gs.idx(q);
                if (gs.node_of[qi] >= 0) {
                    if (gs.node_of[qi] == node.id) continue; // same cluster
                    size_t a = gs.idx(np), b = qi;
                    if (a > b) std::swap(a, b);
                    if (direct.insert({a, b}).second) {
                        SkeletonEdge e;
                        e.id = static_cast<int>(g.edges.size());
                        e.node_a = node.id;
                        e.node_b = gs.node_of[qi];
                        e.path = {np, q};
                        g.edges.push_back(std::move(e));
                    }
                    continue;
                }
                if (gs.visited[qi]) continue;

                SkeletonEdge e;
                e.id = static_cast<int>(g.edges.size());
                e.node_a = node.id;
                e.path.push_back(np);
                Pixel prev = np, cur = q;
                while (true) {
                    size_t ci = gs.idx(cur);
                    gs.visited[ci] = 1;
                    e.path.push_back(cur);
                    Pixel next{-1, -1};
                    bool at_node = false;
                    for (auto& dd : NB) {
                        Pixel n2{cur.row + dd[0], cur.col + dd[1]};
                        if (!img.ink(n2.row, n2.col) || n2 == prev) continue;
                        size_t ni = gs.idx(n2);
                        if (gs.node_of[ni] >= 0) {
                            // Prefer a node pixel that is not the start pixel
                            // unless the walk truly returns to it.
                            e.node_b = gs.node_of[ni];
                            e.path.push_back(n2);
                            at_node = true;
                            break;
                        }
                        if (!gs.visited[ni]) next = n2;
                    }
                    if (at_node) break;
                    if (next.row < 0) {
                        // Degenerate: open walk ended without a node (should
                        // not happen on a consistent skeleton).
                        e.node_b = e.node_a;
                        break;
                    }
                    prev = cur;
                    cur = next;
                }
                g.edges.push_back(std::move(e));
            }
        }
    }

    // Remaining unvisited degree-2 pixels form pure cycles.
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t i = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[i] || gs.node_of[i] >= 0 || gs.visited[i]) continue;
            std::vector<Pixel> cyc;
            Pixel start{r, c}, prev{-1, -1}, cur = start;
            while (true) {
                gs.visited[gs.idx(cur)] = 1;
                cyc.push_back(cur);
                Pixel next{-1, -1};
                for (auto& d : NB) {
                    Pixel n2{cur.row + d[0], cur.col + d[1]};
                    if (!img.ink(n2.row, n2.col) || n2 == prev) continue;
                    if (!gs.visited[gs.idx(n2)]) {
                        next = n2;
                        break;
                    }
                }
                if (next.row < 0) break;
                prev = cur;
                cur = next;
            }
            g.cycles.push_back(std::move(cyc));
        }
    }
    return g;
}

namespace {

ClosedCurve make_curve(const std::vector<Pixel>& pixels) {
    ClosedCurve cc;
    cc.pixels = pixels;
    cc.box = {pixels[0].row, pixels[0].col, pixels[0].row, pixels[0].col};
    double sr = 0, sc = 0;
    for (const Pixel& p : pixels) {
        sr += p.row;
        sc += p.col;
        cc.box.top = std::min(cc.box.top, p.row);
        cc.box.left = std::min(cc.box.left, p.col);
        cc.box.bottom = std::max(cc.box.bottom, p.row);
        cc.box.right = std::max(cc.box.right, p.col);
    }
    cc.centroid_row = sr / static_cast<double>(pixels.size());
    cc.centroid_col = sc / static_cast<double>(pixels.size());
    return cc;
}

// Connectivity between two nodes using a subset of edges.
bool connected_without(const SkeletonGraph& g, const std::vector<char>& removed, int skip_edge,
                       int from, int to) {
    if (from == to) return true;
    std::vector<char> seen(g.nodes.size(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const SkeletonEdge& e : g.edges) {
            if (e.id == skip_edge || removed[e.id] || e.node_a == e.node_b) continue;
            int other = -1;
            if (e.node_a == cur) other = e.node_b;
            else if (e.node_b == cur) other = e.node_a;
            else continue;
            if (seen[other]) continue;
            if (other == to) return true;
            seen[other] = 1;
            stack.push_back(other);
        }
    }
    return false;
}

} // namespace

std::vector<ClosedCurve> detect_closed_curves(SkeletonGraph& g) {
    std::vector<ClosedCurve> curves;

    // Pure pixel cycles.
    for (const auto& cyc : g.cycles) curves.push_back(make_curve(cyc));
    g.cycles.clear();

    std::vector<char> removed(g.edges.size(), 0);

    // Self-loop edges: one curve each.
    for (const SkeletonEdge& e : g.edges) {
        if (e.node_a == e.node_b) {
            if (e.path.size() > 2) { // skip degenerate contacts
                std::vector<Pixel> interior(e.path.begin() + 1, e.path.end() - 1);
                curves.push_back(make_curve(interior));
            }
            removed[e.id] = 1;
        }
    }

    // Independent cycles of the remaining multigraph: fundamental cycles of a
    // spanning forest, one per non-tree edge. Cycle pixels are the non-tree
    // edge plus its tree path.
    std::vector<int> tree_parent(g.nodes.size(), -1);     // node -> tree edge id
    std::vector<int> tree_parent_node(g.nodes.size(), -1);
    std::vector<char> in_tree_node(g.nodes.size(), 0);
    std::vector<char> tree_edge(g.edges.size(), 0);

    for (size_t root = 0; root < g.nodes.size(); root++) {
        if (in_tree_node[root]) continue;
        in_tree_node[root] = 1;
        std::vector<int> queue{static_cast<int>(root)};
        for (size_t qi = 0; qi < queue.size(); qi++) {
            int cur = queue[qi];
            for (const SkeletonEdge& e : g.edges) {
                if (removed[e.id] || e.node_a == e.node_b) continue;
                int other = -1;
                if (e.node_a == cur) other = e.node_b;
                else if (e.node_b == cur) other = e.node_a;
                else continue;
                if (in_tree_node[other]) continue;
                in_tree_node[other] = 1;
                tree_edge[e.id] = 1;
                tree_parent[other] = e.id;
                tree_parent_node[other] = cur;
                queue.push_back(other);
            }
        }
    }

    for (const SkeletonEdge& e : g.edges) {
        if (removed[e.id] || tree_edge[e.id] || e.node_a == e.node_b) continue;
        // Tree path between endpoints: climb to root from both sides.
        auto path_to_root = [&](int n) {
            std::vector<int> nodes{n};
            while (tree_parent_node[n] >= 0) {
                n = tree_parent_node[n];
                nodes.push_back(n);
            }
            return nodes;
        };
        std::vector<int> pa = path_to_root(e.node_a);
        std::vector<int> pb = path_to_root(e.node_b);
        // Find lowest common ancestor by trimming the shared tail.
        std::set<int> aset(pa.begin(), pa.end());
        int lca = -1;
        for (int n : pb)
            if (aset.count(n)) {
                lca = n;
                break;
            }
        std::vector<Pixel> pixels(e.path.begin(), e.path.end());
        auto add_path = [&](const std::vector<int>& chain) {
            for (int n : chain) {
                if (n == lca) break;
                const SkeletonEdge& te = g.edges[tree_parent[n]];
                pixels.insert(pixels.end(), te.path.begin(), te.path.end());
            }
        };
        add_path(pa);
        add_path(pb);
        curves.push_back(make_curve(pixels));
    }

    // Delete every edge that lies on some cycle (non-bridges).
    for (const SkeletonEdge& e : g.edges) {
        if (removed[e.id] || e.node_a == e.node_b) continue;
        if (connected_without(g, removed, e.id, e.node_a, e.node_b)) removed[e.id] = 1;
    }

    std::vector<SkeletonEdge> kept;
    for (SkeletonEdge& e : g.edges)
        if (!removed[e.id]) kept.push_back(std::move(e));
    for (size_t i = 0; i < kept.size(); i++) kept[i].id = static_cast<int>(i);
    g.edges = std::move(kept);

    // Drop nodes with no incident edges left.
    std::vector<char> used(g.nodes.size(), 0);
    for (const SkeletonEdge& e : g.edges) {
        used[e.node_a] = 1;
        used[e.node_b] = 1;
    }
    std::vector<int> remap(g.nodes.size(), -1);
    std::vector<SkeletonNode> kept_nodes;
    for (size_t i = 0; i < g.nodes.size(); i++) {
        if (!used[i]) continue;
        remap[i] = static_cast<int>(kept_nodes.size());
        SkeletonNode n = g.nodes[i];
        n.id = remap[i];
        kept_nodes.push_back(std::move(n));
    }
    for (SkeletonEdge& e : g.edges) {
        e.node_a = remap[e.node_a];
        e.node_b = remap[e.node_b];
    }
    g.nodes = std::move(kept_nodes);

    return curves;
}

std::vector<Stroke> extract_strokes(const SkeletonGraph& g, int spur_len) {
    std::vector<Stroke> strokes;
    for (const SkeletonEdge& e : g.edges) {
        if (static_cast<int>(e.interior()) < spur_len) continue;
        Stroke s;
        s.path = e.path;
        s.interior = e.interior();
        // Orient from the right-most terminal (tie: lower one).
        const Pixel& a = s.path.front();
        const Pixel& b = s.path.back();
        if (b.col > a.col || (b.col == a.col && b.row > a.row))
            std::reverse(s.path.begin(), s.path.end());
        strokes.push_back(std::move(s));
    }
    std::sort(strokes.begin(), strokes.end(), [](const Stroke& x, const Stroke& y) {
        int rx = 0, ry = 0;
        for (const Pixel& p : x.path) rx = std::max(rx, p.col);
        for (const Pixel& p : y.path) ry = std::max(ry, p.col);
        if (rx != ry) return rx > ry;
        return x.path.front().row < y.path.front().row;
    });
    return strokes;
}

long pixel_cycle_rank(const BinaryImage& img) {
    long v = 0, e = 0;
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            if (!img.at(r, c)) continue;
            v++;
            // count each adjacency once: E, SW, S, SE
            const int fwd[4][2] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
            for (auto& d : fwd)
                if (img.ink(r + d[0], c + d[1])) e++;
        }
    }
    int comps = 0;
    BinaryImage copy = img;
    // count components via the flood oracle logic inline (cheap)
    std::vector<char> seen(img.size(), 0);
    for (int r = 0; r < img.height; r++) {
        for (int c = 0; c < img.width; c++) {
            size_t i = static_cast<size_t>(r) * img.width + c;
            if (!img.mask[i] || seen[i]) continue;
            comps++;
            std::vector<Pixel> stack{{r, c}};
            seen[i] = 1;
            while (!stack.empty()) {
                Pixel p = stack.back();
                stack.pop_back();
                for (auto& d : NB) {
                    Pixel q{p.row + d[0], p.col + d[1]};
                    if (!img.ink(q.row, q.col)) continue;
                    size_t qi = static_cast<size_t>(q.row) * img.width + q.col;
                    if (!seen[qi]) {
                        seen[qi] = 1;
                        stack.push_back(q);
                    }
                }
            }
        }
    }
    return e - v + comps;
}

} // namespace ocr
