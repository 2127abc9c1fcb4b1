#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "lattice.hpp"

namespace hybridtile {

/// Planar y for a cell: 3 units per diagonal, triangles offset toward their apex.
inline long cell_y(const Cell& c) {
    long y = 3L * c.diag;
    if (c.shape == CellShape::up) return y + 1;
    if (c.shape == CellShape::down) return y - 1;
    return y;
}

/// One vertex per cell (ids follow the sorted cell order, top row first), one unit edge
/// per shared cell edge. Boundary lists "top" and "bottom" hold the extreme rows; for
/// quasi-hexagons "ell_above"/"ell_below" hold the rows resting on ell from each side.
inline MatchGraph dual_graph(const Region& r) {
    MatchGraph g;
    std::map<std::pair<int, int>, VertexId> half_owner;  // (strip, v) -> vertex
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        const Cell& c = r.cells[i];
        VertexId id = static_cast<VertexId>(i);
        g.add_vertex(id, VertexData{c.color == Color::black ? kBlack : kWhite, c.offset, cell_y(c)});
        switch (c.shape) {
            case CellShape::up: half_owner[{c.diag + 1, c.offset}] = id; break;
            case CellShape::down: half_owner[{c.diag, c.offset}] = id; break;
            case CellShape::square:
                half_owner[{c.diag + 1, c.offset}] = id;
                half_owner[{c.diag, c.offset}] = id;
                break;
        }
    }
    for (auto& [key, id] : half_owner) {
        auto [s, v] = key;
        auto right = half_owner.find({s, v + 1});
        if (right != half_owner.end() && right->second != id && !g.has_edge(id, right->second))
            g.add_edge(id, right->second);
    }
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        const Cell& c = r.cells[i];
        if (c.shape != CellShape::up) continue;
        auto below = half_owner.find({c.diag, c.offset});
        if (below != half_owner.end()) g.add_edge(static_cast<VertexId>(i), below->second);
    }

    auto row_list = [&](CellShape shape, int diag) {
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < r.cells.size(); ++i)
            if (r.cells[i].shape == shape && r.cells[i].diag == diag) ids.push_back(static_cast<VertexId>(i));
        return g.planar_order(ids);
    };
    g.set_boundary("top", row_list(CellShape::down, r.top));
    g.set_boundary("bottom", row_list(CellShape::up, r.bottom));
    if (r.params.kind != RegionKind::douglas) {
        g.set_boundary("ell_above", row_list(CellShape::up, r.ell));
        g.set_boundary("ell_below", row_list(CellShape::down, r.ell_prime));
    }
    return g;
}

}  // namespace hybridtile
