#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "transforms.hpp"

namespace hybridtile {

using Json = nlohmann::json;

/// Canonical form: cells sorted by (row, offset).
inline Json region_to_json(const Region& r) {
    Json j;
    j["kind"] = to_string(r.params.kind);
    j["a"] = r.params.a;
    j["d"] = r.params.d;
    j["c"] = r.params.c;
    j["dprime"] = r.params.dprime;
    std::vector<const Cell*> cells;
    for (const auto& c : r.cells) cells.push_back(&c);
    std::stable_sort(cells.begin(), cells.end(), [](const Cell* x, const Cell* y) {
        return std::tuple(x->row(), x->offset, static_cast<int>(x->shape)) <
               std::tuple(y->row(), y->offset, static_cast<int>(y->shape));
    });
    Json arr = Json::array();
    for (const Cell* c : cells)
        arr.push_back({{"row", c->row()}, {"offset", c->offset}, {"shape", to_string(c->shape)},
                       {"color", to_string(c->color)}});
    j["cells"] = std::move(arr);
    j["diagonals"] = r.diagonals;
    return j;
}

inline RegionParams region_params_from_json(const Json& j) {
    try {
        RegionParams p;
        p.kind = region_kind_from(j.at("kind").get<std::string>());
        p.a = j.at("a").get<int>();
        p.d = j.value("d", std::vector<int>{});
        p.c = j.value("c", std::vector<int>{});
        p.dprime = j.value("dprime", std::vector<int>{});
        return p;
    } catch (const Json::exception& e) {
        throw InvalidParams(std::string("region json: ") + e.what());
    }
}

/// Rebuilds from the parameters; a cells array, if present, must agree with the rebuild.
inline Region region_from_json(const Json& j) {
    Region r = build_region(region_params_from_json(j));
    if (j.contains("cells") && j.at("cells") != region_to_json(r).at("cells"))
        throw InvalidParams("region json: cells do not match the parameters");
    return r;
}

inline Json graph_to_json(const MatchGraph& g) {
    Json j;
    Json vs = Json::array();
    for (VertexId v : g.vertex_ids()) {
        Json o{{"id", v}};
        const auto& d = g.data(v);
        if (d.cls) o["class"] = *d.cls;
        if (d.x) o["x"] = *d.x;
        if (d.y) o["y"] = *d.y;
        vs.push_back(std::move(o));
    }
    Json es = Json::array();
    for (const auto& e : g.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"weight", to_string(e.weight)}});
    j["vertices"] = std::move(vs);
    j["edges"] = std::move(es);
    j["boundaries"] = Json::object();
    for (const auto& [name, list] : g.boundaries()) j["boundaries"][name] = list;
    return j;
}

inline MatchGraph graph_from_json(const Json& j) {
    MatchGraph g;
    try {
        for (const auto& o : j.at("vertices")) {
            VertexData d;
            if (o.contains("class")) d.cls = o.at("class").get<int>();
            if (o.contains("x")) d.x = o.at("x").get<long>();
            if (o.contains("y")) d.y = o.at("y").get<long>();
            g.add_vertex(o.at("id").get<VertexId>(), d);
        }
        for (const auto& e : j.at("edges")) {
            const auto& w = e.value("weight", Json("1"));
            Rational weight = w.is_string() ? parse_rational(w.get<std::string>()) : Rational(w.get<long>());
            g.add_edge(e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), weight);
        }
        if (j.contains("boundaries"))
            for (const auto& [name, list] : j.at("boundaries").items())
                g.set_boundary(name, list.get<std::vector<VertexId>>());
    } catch (const Json::exception& e) {
        throw InvalidParams(std::string("graph json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidParams(std::string("graph json: ") + e.what());
    }
    return g;
}

inline Json step_to_json(const RewriteStep& s, bool with_graphs = false) {
    Json j{{"name", s.name}, {"mu", to_string(s.mu)}, {"locus", s.locus},
           {"vertices_before", s.before.num_vertices()}, {"vertices_after", s.after.num_vertices()}};
    if (s.exponent) j["exponent"] = *s.exponent;
    if (with_graphs) {
        j["before"] = graph_to_json(s.before);
        j["after"] = graph_to_json(s.after);
    }
    return j;
}

inline Json trace_to_json(const TransformTrace& t, bool with_graphs = false) {
    Json steps = Json::array();
    Rational running = 1;
    for (const auto& s : t.steps) {
        running *= s.mu;
        Json js = step_to_json(s, with_graphs);
        js["cumulative_mu"] = to_string(running);
        steps.push_back(std::move(js));
    }
    Json j{{"steps", std::move(steps)}, {"mu", to_string(t.mu)}};
    if (auto e = t.exponent()) j["exponent"] = *e;
    Json term = Json::array();
    for (const auto& s : t.terminal) term.push_back(to_string(s));
    j["terminal"] = std::move(term);
    j["result"] = graph_to_json(t.result);
    return j;
}

}  // namespace hybridtile
