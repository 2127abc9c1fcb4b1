#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace hybridtile {

// Frame: lattice point (x, y) maps to (u, v) = (y - x, x + y). Drawn diagonals are
// the lines u = const, larger u is higher. A south step is (u, v) -> (u-1, v-1), an
// east step is (u, v) -> (u-1, v+1). Strip s is the band s-1 <= u <= s.

enum class RegionKind { symmetric, douglas, asymmetric };
enum class CellShape { square, up, down };
enum class Color { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

inline const char* to_string(RegionKind k) {
    switch (k) {
        case RegionKind::symmetric: return "symmetric";
        case RegionKind::douglas: return "douglas";
        default: return "asymmetric";
    }
}
inline const char* to_string(CellShape s) {
    switch (s) {
        case CellShape::square: return "square";
        case CellShape::up: return "up";
        default: return "down";
    }
}
inline const char* to_string(Color c) { return c == Color::black ? "black" : "white"; }

inline RegionKind region_kind_from(const std::string& s) {
    if (s == "symmetric") return RegionKind::symmetric;
    if (s == "douglas") return RegionKind::douglas;
    if (s == "asymmetric") return RegionKind::asymmetric;
    throw InvalidParams("unknown region kind " + s);
}

struct RegionParams {
    RegionKind kind = RegionKind::symmetric;
    int a = 1;
    std::vector<int> d;
    std::vector<int> c;
    std::vector<int> dprime;
};

struct LatticePoint {
    int u = 0;
    int v = 0;
    bool operator==(const LatticePoint&) const = default;
    auto operator<=>(const LatticePoint&) const = default;
};

/// A square sits on diagonal `diag` (the diagonal through it). A triangle has its
/// base on `diag`; `up` triangles lie above the base, `down` triangles below it.
struct Cell {
    CellShape shape = CellShape::square;
    Color color = Color::black;
    int diag = 0;
    int offset = 0;
    bool regular = false;

    /// Row index counted down from the top diagonal.
    int row() const { return -diag; }
    auto key() const { return std::tuple(-diag, offset, static_cast<int>(shape)); }
};

struct Region {
    RegionParams params;
    std::vector<Cell> cells;
    std::vector<int> diagonals;  ///< drawn diagonals, top to bottom
    int top = 0;
    int bottom = 0;
    int ell = 0;
    int ell_prime = 0;  ///< equals ell for symmetric and Douglas regions
    LatticePoint A, B, C, D, E, F;
    std::vector<LatticePoint> sw_path, ne_path;

    bool drawn(int u) const { return std::find(diagonals.begin(), diagonals.end(), u) != diagonals.end(); }
};

namespace detail {

struct Coloring {
    int top;
    std::map<int, int> g;  // strip -> parity shift

    Color at(int strip, int v) const { return ((v + g.at(strip)) & 1) ? Color::black : Color::white; }
};

inline Coloring make_coloring(int top, int bottom, const std::set<int>& drawn) {
    Coloring col{top, {}};
    // Down triangles of the top strip have v = top + 1 (mod 2) and are white.
    col.g[top] = ((top + 1) % 2 + 2) % 2;
    for (int s = top; s > bottom + 1; --s) col.g[s - 1] = col.g[s] ^ (drawn.count(s - 1) ? 1 : 0);
    return col;
}

inline std::vector<LatticePoint> walk(LatticePoint start, int switch_u, Color first, int bottom,
                                      const Coloring& col) {
    std::vector<LatticePoint> path{start};
    LatticePoint p = start;
    while (p.u > bottom) {
        Color want = p.u > switch_u ? first : opposite(first);
        bool south = col.at(p.u, p.v) == want;
        bool east = col.at(p.u, p.v + 1) == want;
        if (south == east) throw std::logic_error("boundary step is not unique");
        p = south ? LatticePoint{p.u - 1, p.v - 1} : LatticePoint{p.u - 1, p.v + 1};
        path.push_back(p);
    }
    return path;
}

inline void check_positive(const std::vector<int>& xs, const char* what) {
    for (int x : xs)
        if (x <= 0) throw InvalidParams(std::string(what) + " distances must be positive");
}

}  // namespace detail

inline Region build_region(const RegionParams& p) {
    if (p.a < 1) throw InvalidParams("a must be positive");
    detail::check_positive(p.d, "upper");
    detail::check_positive(p.c, "middle");
    detail::check_positive(p.dprime, "lower");
    if (p.d.empty()) throw InvalidParams("at least one upper distance is required");
    if (p.kind == RegionKind::asymmetric && p.c.empty()) throw InvalidParams("asymmetric regions need middle distances");
    if (p.kind != RegionKind::asymmetric && !p.c.empty()) throw InvalidParams("middle distances only apply to asymmetric regions");
    if (p.kind != RegionKind::douglas && p.dprime.empty()) throw InvalidParams("at least one lower distance is required");

    Region r;
    r.params = p;
    if (p.kind == RegionKind::douglas) r.params.dprime.clear();
    int u = 0;
    r.diagonals.push_back(u);
    for (int x : p.d) r.diagonals.push_back(u -= x);
    r.ell = u;
    for (int x : p.c) r.diagonals.push_back(u -= x);
    r.ell_prime = u;
    if (p.kind != RegionKind::douglas) {
        // lower distances are listed from the bottom up
        for (auto it = p.dprime.rbegin(); it != p.dprime.rend(); ++it) r.diagonals.push_back(u -= *it);
    }
    r.top = 0;
    r.bottom = u;
    std::set<int> drawn(r.diagonals.begin(), r.diagonals.end());
    auto col = detail::make_coloring(r.top, r.bottom, drawn);

    r.A = {0, 0};
    r.F = {0, 2 * p.a};
    r.sw_path = detail::walk(r.A, r.ell, Color::black, r.bottom, col);
    r.ne_path = detail::walk(r.F, r.ell_prime, Color::white, r.bottom, col);
    auto at_u = [](const std::vector<LatticePoint>& path, int target) { return path[static_cast<std::size_t>(-target)]; };
    r.B = at_u(r.sw_path, r.ell);
    r.C = r.sw_path.back();
    r.E = at_u(r.ne_path, r.ell_prime);
    r.D = r.ne_path.back();

    std::set<LatticePoint> sw(r.sw_path.begin(), r.sw_path.end());
    for (auto& q : r.ne_path)
        if (sw.count(q)) throw BoundaryIntersection("southwestern and northeastern boundaries meet");

    // half cells per strip: (strip, v)
    std::set<std::pair<int, int>> halves;
    for (std::size_t i = 0; i + 1 < r.sw_path.size(); ++i) {
        int s = r.sw_path[i].u;
        int first = std::max(r.sw_path[i].v, r.sw_path[i + 1].v);
        int last = std::min(r.ne_path[i].v, r.ne_path[i + 1].v);
        if (first > last) throw BoundaryIntersection("region pinches off in strip " + std::to_string(s));
        for (int v = first; v <= last; ++v) halves.insert({s, v});
    }

    std::map<std::tuple<int, int, int>, Cell> cells;
    for (auto [s, v] : halves) {
        bool up_half = ((v - s) % 2 + 2) % 2 == 0;
        Cell c;
        c.offset = v;
        c.color = col.at(s, v);
        if (up_half) {
            int base = s - 1;
            if (drawn.count(base)) {
                c.shape = CellShape::up;
                c.diag = base;
            } else {
                if (!halves.count({s - 1, v})) throw std::logic_error("square cut by boundary");
                c.shape = CellShape::square;
                c.diag = base;
            }
        } else {
            int base = s;
            if (drawn.count(base)) {
                c.shape = CellShape::down;
                c.diag = base;
            } else {
                if (!halves.count({s + 1, v})) throw std::logic_error("square cut by boundary");
                c.shape = CellShape::square;
                c.diag = base;
            }
        }
        cells[c.key()] = c;
    }
    for (auto& [_, c] : cells) {
        // above ell the away-pointing triangles are the up ones; below ell (or ell') the down ones
        bool above = c.shape == CellShape::up ? c.diag >= r.ell : c.diag > r.ell;
        if (c.shape == CellShape::square)
            c.regular = true;
        else if (above)
            c.regular = c.shape == CellShape::up;
        else
            c.regular = c.shape == CellShape::down;
        r.cells.push_back(c);
    }
    return r;
}

inline Region build_symmetric(RegionParams p) {
    if (p.kind != RegionKind::symmetric) throw InvalidParams("expected symmetric parameters");
    return build_region(p);
}

inline Region build_douglas(RegionParams p) {
    if (p.kind != RegionKind::douglas) throw InvalidParams("expected Douglas parameters");
    return build_region(p);
}

inline Region build_asymmetric(RegionParams p) {
    if (p.kind != RegionKind::asymmetric) throw InvalidParams("expected asymmetric parameters");
    return build_region(p);
}

struct Row {
    CellShape shape;
    int diag;
    Color color;
    std::vector<const Cell*> cells;
};

/// Rows of cells: triangles of one orientation on one base diagonal, or squares on one diagonal.
inline std::vector<Row> rows_of(const Region& r) {
    std::map<std::pair<int, int>, Row> rows;
    for (auto& c : r.cells) {
        auto key = std::pair(-c.diag, static_cast<int>(c.shape));
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, Row{c.shape, c.diag, c.color, {}}).first;
        if (it->second.color != c.color) throw std::logic_error("row with mixed colors");
        it->second.cells.push_back(&c);
    }
    std::vector<Row> out;
    for (auto& [_, row] : rows) out.push_back(std::move(row));
    return out;
}

/// Strip-level location of a cell relative to a diagonal: true when the cell lies above it.
inline bool cell_above(const Cell& c, int diag) {
    switch (c.shape) {
        case CellShape::up: return c.diag >= diag;
        case CellShape::down: return c.diag > diag;
        default: return c.diag > diag;
    }
}
inline bool cell_below(const Cell& c, int diag) {
    switch (c.shape) {
        case CellShape::up: return c.diag < diag;
        case CellShape::down: return c.diag <= diag;
        default: return c.diag < diag;
    }
}

enum class SlopeRule { parity, literal };

struct RegionStats {
    int h = 0;
    int h_prime = 0;
    int m = 0;
    int n = 0;
    long C = 0;
    long C_prime = 0;
    int q = 0;
    Color bottom_row_color = Color::black;
    int resting_above = 0;  ///< triangles resting on ell from above
    int resting_below = 0;  ///< triangles resting on ell (ell') from below
    int h0 = 0;
    int Phi = 0;
    std::vector<int> phi;
    std::vector<int> layer_widths;
    std::vector<std::string> layer_types;
};

namespace detail {

/// Classifies a middle layer between diagonals top_u > bot_u. The side is the side
/// on which the northeastern boundary leans relative to the southwestern one.
inline std::string middle_layer_type(const Region& r, int top_u, int bot_u) {
    int height = top_u - bot_u;
    auto idx = [](int u) { return static_cast<std::size_t>(-u); };
    int shift_sw = r.sw_path[idx(bot_u)].v - r.sw_path[idx(top_u)].v;
    int shift_ne = r.ne_path[idx(bot_u)].v - r.ne_path[idx(top_u)].v;
    std::string side = shift_ne + shift_sw >= 0 ? "right" : "left";
    return side + (height % 2 ? "-odd" : "-even");
}

}  // namespace detail

inline RegionStats region_stats(const Region& r, SlopeRule rule = SlopeRule::parity) {
    RegionStats st;
    const int ell = r.ell;
    const int lower = r.ell_prime;
    for (auto& row : rows_of(r)) {
        const Cell& c = *row.cells.front();
        bool regular = c.regular;
        long len = static_cast<long>(row.cells.size());
        if (cell_above(c, ell)) {
            if (row.color == Color::black && regular) {
                st.h++;
                st.C += len;
            }
            if (row.color == Color::black && row.shape == CellShape::up) st.m++;
            if (row.color == Color::black && row.shape == CellShape::down) st.n++;
        }
        if (cell_below(c, lower) && row.color == Color::white && regular) {
            st.h_prime++;
            st.C_prime += len;
        }
        if (row.shape == CellShape::up && row.diag == ell) st.resting_above = static_cast<int>(len);
        if (row.shape == CellShape::down && row.diag == lower) st.resting_below = static_cast<int>(len);
        if (row.shape == CellShape::up && row.diag == r.bottom) st.bottom_row_color = row.color;
    }
    st.q = r.params.a + st.m - st.n;

    // layers between consecutive drawn diagonals
    for (std::size_t i = 0; i + 1 < r.diagonals.size(); ++i) {
        int hi = r.diagonals[i], lo = r.diagonals[i + 1];
        long best = 0;
        for (auto& row : rows_of(r)) {
            if (row.color != Color::black) continue;
            const Cell& c = *row.cells.front();
            bool inside = c.shape == CellShape::square ? (c.diag < hi && c.diag > lo)
                          : c.shape == CellShape::up  ? c.diag == lo
                                                      : c.diag == hi;
            if (inside) best = std::max(best, static_cast<long>(row.cells.size()));
        }
        st.layer_widths.push_back(static_cast<int>(best) - 1);
    }

    if (r.params.kind == RegionKind::asymmetric) {
        int u = r.ell;
        int twice_h0 = 0;
        for (int cj : r.params.c) {
            auto type = detail::middle_layer_type(r, u, u - cj);
            int phi;
            if (type == "right-odd")
                phi = 1;
            else if (type == "left-odd")
                phi = -1;
            else
                phi = rule == SlopeRule::parity ? 0 : 1;
            st.layer_types.push_back(type);
            st.phi.push_back(phi);
            st.Phi += phi;
            twice_h0 += cj - phi;
            u -= cj;
        }
        st.h0 = twice_h0 / 2;
    }
    return st;
}

}  // namespace hybridtile
