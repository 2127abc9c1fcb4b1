#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace hybridtile {

enum class ARVariant { plain, baseless, combed, combed_baseless };
enum class TrimKind { LR, RR, TLR };
enum class LKind { L, Lbar };
enum class CombSide { bottom, top };

namespace detail {

inline void require_positive(std::initializer_list<int> xs, const char* what) {
    for (int x : xs)
        if (x < 1) throw InvalidParams(std::string(what) + ": parameters must be positive");
}

/// Vertices with the extreme y coordinate, left to right.
inline std::vector<VertexId> extreme_row(const MatchGraph& g, bool top) {
    std::vector<VertexId> ids;
    long best = 0;
    bool any = false;
    for (VertexId v : g.vertex_ids()) {
        long y = g.data(v).y.value_or(0);
        if (!any || (top ? y > best : y < best)) {
            best = y;
            any = true;
            ids.clear();
        }
        if (y == best) ids.push_back(v);
    }
    return g.planar_order(ids);
}

inline void refresh_rows(MatchGraph& g) {
    g.set_boundary("top", extreme_row(g, true));
    g.set_boundary("bottom", extreme_row(g, false));
}

/// Board rows 1..rows, columns 1..cols, corners black; white squares become vertices at
/// (x, y) = (column, -row), joined when diagonally adjacent.
inline MatchGraph aztec_board(int rows, int cols) {
    MatchGraph g;
    std::map<std::pair<int, int>, VertexId> at;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if ((i + j) % 2 == 1) at[{i, j}] = g.add_vertex(VertexData{i % 2 ? kBlack : kWhite, j, -i});
    for (auto& [pos, id] : at) {
        auto [i, j] = pos;
        for (int dj : {-1, 1}) {
            auto it = at.find({i + 1, j + dj});
            if (it != at.end()) g.add_edge(id, it->second);
        }
    }
    refresh_rows(g);
    return g;
}

}  // namespace detail

/// Appends one pendant vertex per listed vertex, exported as list "tips" in the same order.
inline MatchGraph comb(MatchGraph g, const std::string& list, CombSide side) {
    std::vector<VertexId> tips;
    for (VertexId v : g.boundary(list)) {
        const auto& d = g.data(v);
        VertexData t;
        if (d.cls) t.cls = *d.cls == kBlack ? kWhite : kBlack;
        t.x = d.x;
        if (d.y) t.y = *d.y + (side == CombSide::bottom ? -1 : 1);
        VertexId id = g.add_vertex(t);
        g.add_edge(v, id);
        tips.push_back(id);
    }
    g.set_boundary("tips", tips);
    return g;
}

/// n = 0 is allowed and gives a column of m isolated vertices (plus the base row).
inline MatchGraph aztec_rectangle(int m, int n, ARVariant variant = ARVariant::plain) {
    detail::require_positive({m, n + 1}, "aztec_rectangle");
    bool baseless = variant == ARVariant::baseless || variant == ARVariant::combed_baseless;
    MatchGraph g = detail::aztec_board(2 * m + (baseless ? 0 : 1), 2 * n + 1);
    if (variant == ARVariant::combed || variant == ARVariant::combed_baseless) g = comb(g, "bottom", CombSide::bottom);
    return g;
}

inline MatchGraph side_trimmed(int m, int n, TrimKind kind) {
    detail::require_positive({m, n}, "side_trimmed");
    MatchGraph g = aztec_rectangle(m, n);
    long target = kind == TrimKind::RR ? 2L * n + 1 : 1L;
    for (VertexId v : g.vertex_ids())
        if (*g.data(v).x == target) g.remove_vertex(v);
    if (kind == TrimKind::TLR)
        for (VertexId v : detail::extreme_row(g, true)) g.remove_vertex(v);
    detail::refresh_rows(g);
    return g;
}

/// Identifies list2[i] of h with list1[i] of g. Edges between identified vertices are
/// merged additively. h's vertices are translated so the first identified pair coincides,
/// and h's boundary lists are re-exported with the prefix "other:".
inline MatchGraph connected_sum(const MatchGraph& g, const MatchGraph& h, const std::string& list1,
                                const std::string& list2) {
    std::vector<VertexId> l1 = list1.empty() ? std::vector<VertexId>{} : g.boundary(list1);
    std::vector<VertexId> l2 = list2.empty() ? std::vector<VertexId>{} : h.boundary(list2);
    if (l1.size() != l2.size()) throw LengthMismatch("connected sum lists differ in length");
    MatchGraph out = g;
    std::map<VertexId, VertexId> remap;
    for (std::size_t i = 0; i < l2.size(); ++i) remap[l2[i]] = l1[i];
    long dx = 0, dy = 0;
    if (!l1.empty()) {
        const auto &a = g.data(l1[0]), &b = h.data(l2[0]);
        if (a.x && a.y && b.x && b.y) {
            dx = *a.x - *b.x;
            dy = *a.y - *b.y;
        }
    } else if (g.num_vertices() && h.num_vertices()) {
        // disjoint union: place h to the right
        long maxx = 0, minx = 0;
        bool any = false;
        for (VertexId v : g.vertex_ids())
            if (g.data(v).x) maxx = any ? std::max(maxx, *g.data(v).x) : *g.data(v).x, any = true;
        any = false;
        for (VertexId v : h.vertex_ids())
            if (h.data(v).x) minx = any ? std::min(minx, *h.data(v).x) : *h.data(v).x, any = true;
        dx = maxx - minx + 2;
    }
    for (VertexId v : h.vertex_ids()) {
        if (remap.count(v)) continue;
        VertexData d = h.data(v);
        if (d.x) *d.x += dx;
        if (d.y) *d.y += dy;
        remap[v] = out.add_vertex(d);
    }
    for (const auto& e : h.edges()) {
        VertexId a = remap[e.u], b = remap[e.v];
        if (a == b) throw BadLocus("connected sum creates a self-loop");
        out.accumulate_edge(a, b, e.weight);
    }
    for (auto& [name, list] : h.boundaries()) {
        std::vector<VertexId> mapped;
        std::set<VertexId> seen;
        for (VertexId v : list)
            if (seen.insert(remap[v]).second) mapped.push_back(remap[v]);
        out.set_boundary("other:" + name, mapped);
    }
    if (!out.classes_consistent())
        for (VertexId v : out.vertex_ids()) out.data(v).cls.reset();
    return out;
}

/// L^{a,b}_{c,d} (kind L) and its mirrored-gluing variant (kind Lbar).
inline MatchGraph l_shaped(int a, int b, int c, int d, LKind kind) {
    detail::require_positive({a, b, c, d}, "l_shaped");
    MatchGraph top = aztec_rectangle(a, b, ARVariant::baseless);
    MatchGraph low = side_trimmed(c, d, kind == LKind::L ? TrimKind::LR : TrimKind::TLR);
    auto bottom = top.boundary("bottom");
    auto upper = low.boundary("top");
    if (static_cast<int>(bottom.size()) > d) {
        std::size_t extra = bottom.size() - static_cast<std::size_t>(d);
        // L drops the rightmost surplus bottom vertices, Lbar the leftmost
        std::vector<VertexId> drop = kind == LKind::L ? std::vector<VertexId>(bottom.end() - extra, bottom.end())
                                                      : std::vector<VertexId>(bottom.begin(), bottom.begin() + extra);
        for (VertexId v : drop) top.remove_vertex(v);
        bottom = top.boundary("bottom");
    }
    std::vector<VertexId> l1, l2;
    std::size_t k = bottom.size();
    if (kind == LKind::L) {
        l1.assign(bottom.begin(), bottom.end());
        l2.assign(upper.begin(), upper.begin() + k);
    } else {
        l1.assign(bottom.end() - k, bottom.end());
        l2.assign(upper.end() - k, upper.end());
    }
    top.set_boundary("glue", l1);
    low.set_boundary("glue", l2);
    MatchGraph g = connected_sum(top, low, "glue", "glue");
    g.clear_boundaries();
    detail::refresh_rows(g);
    return g;
}

/// Removes the bottommost row.
inline MatchGraph bot(MatchGraph g) {
    for (VertexId v : detail::extreme_row(g, false)) g.remove_vertex(v);
    detail::refresh_rows(g);
    return g;
}

namespace detail {

/// Lozenge hexagon with sides top, ur, lr, top, ur, lr (clockwise from the top side)
/// on a triangular lattice with horizontal lines, restricted to rows [row_lo, row_hi).
/// Unit triangles become vertices; x is in half units, y falls with depth.
inline MatchGraph honeycomb_rows(int top, int ur, int lr, int row_lo, int row_hi) {
    int height = ur + lr;
    // doubled boundary abscissae of horizontal line y
    auto left = [&](int y) { return y <= lr ? -y : -lr + (y - lr); };
    auto right = [&](int y) { return y <= ur ? 2 * top + y : 2 * top + ur - (y - ur); };
    MatchGraph g;
    std::map<std::pair<int, int>, VertexId> at;
    for (int y = std::max(0, row_lo); y < std::min(height, row_hi); ++y) {
        for (int c = left(y) - 2; c <= right(y) + 2; ++c) {
            bool up = ((c - y) % 2 + 2) % 2 == 0;
            int apex_line = up ? y : y + 1, base_line = up ? y + 1 : y;
            bool inside = c >= left(apex_line) && c <= right(apex_line) && c - 1 >= left(base_line) &&
                          c + 1 <= right(base_line);
            if (!inside) continue;
            long ycoord = -(3L * y + (up ? 2 : 1));
            at[{y, c}] = g.add_vertex(VertexData{up ? kBlack : kWhite, c, ycoord});
        }
    }
    for (auto& [pos, id] : at) {
        auto [y, c] = pos;
        auto right_nb = at.find({y, c + 1});
        if (right_nb != at.end()) g.add_edge(id, right_nb->second);
        bool up = ((c - y) % 2 + 2) % 2 == 0;
        if (up) {
            auto below = at.find({y + 1, c});
            if (below != at.end()) g.add_edge(id, below->second);
        }
    }
    refresh_rows(g);
    return g;
}

}  // namespace detail

inline MatchGraph hexagon_dual(int a, int b, int c) {
    detail::require_positive({a, b, c}, "hexagon_dual");
    return detail::honeycomb_rows(a, b, c, 0, b + c);
}

/// Lower half of the honeycomb with sides a, 2b-c, c, a, 2b-c, c; "top" has a+c vertices.
inline MatchGraph half_honeycomb(int a, int b, int c) {
    detail::require_positive({a, b, c}, "half_honeycomb");
    if (b < c) throw InvalidParams("half_honeycomb requires b >= c");
    return detail::honeycomb_rows(a, 2 * b - c, c, b, 2 * b);
}

inline MatchGraph gamma(int a, int b, int c, int d, int e) {
    detail::require_positive({a, b, c, d, e}, "gamma");
    if (b < c) throw InvalidParams("gamma requires b >= c");
    MatchGraph top = aztec_rectangle(d, e, ARVariant::baseless);
    MatchGraph low = half_honeycomb(a, b, c);
    auto bottom = top.boundary("bottom");
    auto upper = low.boundary("top");
    if (a + c < e + 1) {
        for (std::size_t i = static_cast<std::size_t>(a + c); i < bottom.size(); ++i) top.remove_vertex(bottom[i]);
        bottom.resize(static_cast<std::size_t>(a + c));
    }
    top.set_boundary("glue", bottom);
    low.set_boundary("glue", std::vector<VertexId>(upper.begin(), upper.begin() + static_cast<long>(bottom.size())));
    MatchGraph g = connected_sum(top, low, "glue", "glue");
    g.clear_boundaries();
    detail::refresh_rows(g);
    return g;
}

inline MatchGraph with_uniform_weight(MatchGraph g, const Rational& w) {
    for (const auto& e : g.edges()) g.set_weight(e.u, e.v, w);
    return g;
}

/// 2m x 2n (or general r x c) grid of unit squares, one vertex per square.
inline MatchGraph grid_graph(int rows, int cols) {
    detail::require_positive({rows, cols}, "grid_graph");
    MatchGraph g;
    std::map<std::pair<int, int>, VertexId> at;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) at[{i, j}] = g.add_vertex(VertexData{(i + j) % 2 ? kWhite : kBlack, j, -i});
    for (auto& [pos, id] : at) {
        auto [i, j] = pos;
        if (at.count({i, j + 1})) g.add_edge(id, at[{i, j + 1}]);
        if (at.count({i + 1, j})) g.add_edge(id, at[{i + 1, j}]);
    }
    detail::refresh_rows(g);
    return g;
}

}  // namespace hybridtile
