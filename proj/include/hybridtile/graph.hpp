#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hybridtile {

using VertexId = std::int64_t;

/// Bipartition class labels. Dual graphs use kBlack/kWhite for cell colors.
inline constexpr int kBlack = 1;
inline constexpr int kWhite = 2;

struct VertexData {
    std::optional<int> cls;
    std::optional<long> x;
    std::optional<long> y;
};

struct Edge {
    VertexId u;
    VertexId v;
    Rational weight;
};

/// Weighted simple graph with stable ids and named ordered boundary lists.
class MatchGraph {
public:
    using Adjacency = std::map<VertexId, Rational>;

    void add_vertex(VertexId id, VertexData data = {}) {
        if (vdata_.count(id)) throw BadLocus("duplicate vertex " + std::to_string(id));
        vdata_[id] = data;
        adj_[id];
    }

    VertexId add_vertex(VertexData data = {}) {
        VertexId id = next_id();
        add_vertex(id, data);
        return id;
    }

    bool has_vertex(VertexId id) const { return vdata_.count(id) != 0; }

    void remove_vertex(VertexId id) {
        require(id);
        for (auto& [w, _] : adj_.at(id)) adj_.at(w).erase(id);
        adj_.erase(id);
        vdata_.erase(id);
        for (auto& [_, list] : boundaries_)
            list.erase(std::remove(list.begin(), list.end(), id), list.end());
    }

    void add_edge(VertexId u, VertexId v, Rational w = 1) {
        require(u);
        require(v);
        if (u == v) throw BadLocus("self-loop at " + std::to_string(u));
        if (adj_.at(u).count(v))
            throw BadLocus("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        if (w <= 0) throw InvalidParams("edge weights must be positive");
        adj_[u][v] = w;
        adj_[v][u] = w;
    }

    /// Adds w to the existing weight, or creates the edge. Parallel edges
    /// contribute additively to every matching count, so this is the merge rule.
    void accumulate_edge(VertexId u, VertexId v, const Rational& w) {
        if (has_edge(u, v))
            set_weight(u, v, weight(u, v) + w);
        else
            add_edge(u, v, w);
    }

    void remove_edge(VertexId u, VertexId v) {
        if (!has_edge(u, v)) throw BadLocus("no such edge");
        adj_[u].erase(v);
        adj_[v].erase(u);
    }

    bool has_edge(VertexId u, VertexId v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    const Rational& weight(VertexId u, VertexId v) const {
        if (!has_edge(u, v)) throw BadLocus("no such edge");
        return adj_.at(u).at(v);
    }

    void set_weight(VertexId u, VertexId v, const Rational& w) {
        if (!has_edge(u, v)) throw BadLocus("no such edge");
        if (w <= 0) throw InvalidParams("edge weights must be positive");
        adj_[u][v] = w;
        adj_[v][u] = w;
    }

    const Adjacency& neighbors(VertexId id) const {
        require(id);
        return adj_.at(id);
    }

    std::size_t degree(VertexId id) const { return neighbors(id).size(); }

    const VertexData& data(VertexId id) const {
        require(id);
        return vdata_.at(id);
    }
    VertexData& data(VertexId id) {
        require(id);
        return vdata_.at(id);
    }

    std::vector<VertexId> vertex_ids() const {
        std::vector<VertexId> ids;
        ids.reserve(vdata_.size());
        for (auto& [id, _] : vdata_) ids.push_back(id);
        return ids;
    }

    std::size_t num_vertices() const { return vdata_.size(); }

    std::size_t num_edges() const {
        std::size_t n = 0;
        for (auto& [_, nb] : adj_) n += nb.size();
        return n / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (auto& [u, nb] : adj_)
            for (auto& [v, w] : nb)
                if (u < v) out.push_back({u, v, w});
        return out;
    }

    VertexId next_id() const { return vdata_.empty() ? 0 : vdata_.rbegin()->first + 1; }

    void set_boundary(const std::string& name, std::vector<VertexId> list) {
        std::set<VertexId> seen;
        for (VertexId id : list) {
            require(id);
            if (!seen.insert(id).second) throw BadLocus("repeated vertex in boundary " + name);
        }
        boundaries_[name] = std::move(list);
    }

    bool has_boundary(const std::string& name) const { return boundaries_.count(name) != 0; }

    const std::vector<VertexId>& boundary(const std::string& name) const {
        auto it = boundaries_.find(name);
        if (it == boundaries_.end()) throw BadLocus("no boundary list " + name);
        return it->second;
    }

    const std::map<std::string, std::vector<VertexId>>& boundaries() const { return boundaries_; }
    void clear_boundaries() { boundaries_.clear(); }
    void erase_boundary(const std::string& name) { boundaries_.erase(name); }

    /// Left-to-right order: x, then y, then id. Vertices without coordinates sort by id last.
    std::vector<VertexId> planar_order(std::vector<VertexId> ids) const {
        std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return planar_key(a) < planar_key(b); });
        return ids;
    }

    MatchGraph induced(const std::vector<VertexId>& keep) const {
        MatchGraph h;
        std::set<VertexId> s(keep.begin(), keep.end());
        for (VertexId id : s) h.add_vertex(id, data(id));
        for (VertexId u : s)
            for (auto& [v, w] : neighbors(u))
                if (u < v && s.count(v)) h.add_edge(u, v, w);
        return h;
    }

    /// Checks every declared class is consistent with the edges.
    bool classes_consistent() const {
        for (auto& [u, nb] : adj_)
            for (auto& [v, _] : nb) {
                auto cu = vdata_.at(u).cls, cv = vdata_.at(v).cls;
                if (cu && cv && *cu == *cv) return false;
            }
        return true;
    }

    bool all_classified() const {
        for (auto& [_, d] : vdata_)
            if (!d.cls) return false;
        return true;
    }

    /// Proper 2-coloring by BFS if one exists; declared classes win where present.
    std::optional<std::map<VertexId, int>> bipartition() const {
        std::map<VertexId, int> side;
        for (auto& [start, _] : vdata_) {
            if (side.count(start)) continue;
            side[start] = 0;
            std::vector<VertexId> stack{start};
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (auto& [v, w] : adj_.at(u)) {
                    auto it = side.find(v);
                    if (it == side.end()) {
                        side[v] = 1 - side[u];
                        stack.push_back(v);
                    } else if (it->second == side[u]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return side;
    }

private:
    void require(VertexId id) const {
        if (!vdata_.count(id)) throw BadLocus("no such vertex " + std::to_string(id));
    }

    std::tuple<int, long, long, VertexId> planar_key(VertexId id) const {
        const auto& d = vdata_.at(id);
        bool has = d.x.has_value() && d.y.has_value();
        return {has ? 0 : 1, d.x.value_or(0), d.y.value_or(0), id};
    }

    std::map<VertexId, VertexData> vdata_;
    std::map<VertexId, Adjacency> adj_;
    std::map<std::string, std::vector<VertexId>> boundaries_;
};

/// Disjoint union; vertices of h are renumbered after those of g. Returns the id map for h.
inline std::map<VertexId, VertexId> append_graph(MatchGraph& g, const MatchGraph& h,
                                                 const std::string& prefix = "") {
    std::map<VertexId, VertexId> remap;
    VertexId base = g.next_id();
    auto ids = h.vertex_ids();
    VertexId lo = ids.empty() ? 0 : ids.front();
    for (VertexId id : ids) remap[id] = base + id - lo;
    for (VertexId id : ids) g.add_vertex(remap[id], h.data(id));
    for (const auto& e : h.edges()) g.add_edge(remap[e.u], remap[e.v], e.weight);
    if (!prefix.empty())
        for (auto& [name, list] : h.boundaries()) {
            std::vector<VertexId> mapped;
            for (VertexId id : list) mapped.push_back(remap[id]);
            g.set_boundary(prefix + name, mapped);
        }
    return remap;
}

}  // namespace hybridtile
