#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace hybridtile {

struct CountOptions {
    std::size_t max_vertices = 0;  ///< 0 disables the check
    std::size_t max_states = 0;    ///< memo entries per component; 0 disables
};

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }
    std::size_t first() const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w[k]));
        return SIZE_MAX;
    }
    bool operator==(const Bits& o) const { return w == o.w; }
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : b.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

inline std::vector<std::vector<VertexId>> components(const MatchGraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId s : g.vertex_ids()) {
        if (seen.count(s)) continue;
        std::vector<VertexId> comp, stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto& [v, _] : g.neighbors(u))
                if (seen.insert(v).second) stack.push_back(v);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Largest number of edges crossing any prefix cut of the order.
inline std::size_t cutwidth(const MatchGraph& g, const std::vector<VertexId>& order) {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<long> delta(order.size() + 1, 0);
    for (VertexId u : order)
        for (auto& [v, _] : g.neighbors(u)) {
            auto a = pos[u], b = pos[v];
            if (a < b) {
                delta[a] += 1;
                delta[b] -= 1;
            }
        }
    long run = 0, best = 0;
    for (long d : delta) {
        run += d;
        best = std::max(best, run);
    }
    return static_cast<std::size_t>(best);
}

inline std::vector<VertexId> bfs_order(const MatchGraph& g, const std::vector<VertexId>& comp) {
    VertexId start = comp.front();
    for (VertexId v : comp)
        if (g.degree(v) < g.degree(start)) start = v;
    std::vector<VertexId> order{start};
    std::set<VertexId> seen{start};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto& [v, _] : g.neighbors(order[i]))
            if (seen.insert(v).second) order.push_back(v);
    return order;
}

/// Picks the candidate elimination order with the smallest cutwidth.
inline std::vector<VertexId> sweep_order(const MatchGraph& g, std::vector<VertexId> comp) {
    std::vector<std::vector<VertexId>> candidates;
    candidates.push_back(bfs_order(g, comp));
    bool coords = std::all_of(comp.begin(), comp.end(), [&](VertexId v) {
        return g.data(v).x.has_value() && g.data(v).y.has_value();
    });
    if (coords) {
        auto by_x = comp, by_y = comp;
        std::sort(by_x.begin(), by_x.end(), [&](VertexId a, VertexId b) {
            return std::tuple(*g.data(a).x, *g.data(a).y, a) < std::tuple(*g.data(b).x, *g.data(b).y, b);
        });
        std::sort(by_y.begin(), by_y.end(), [&](VertexId a, VertexId b) {
            return std::tuple(-*g.data(a).y, *g.data(a).x, a) < std::tuple(-*g.data(b).y, *g.data(b).x, b);
        });
        candidates.push_back(std::move(by_x));
        candidates.push_back(std::move(by_y));
    }
    candidates.push_back(comp);
    std::size_t best = 0, best_w = SIZE_MAX;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto w = cutwidth(g, candidates[i]);
        if (w < best_w) {
            best_w = w;
            best = i;
        }
    }
    return candidates[best];
}

class ComponentCounter {
public:
    ComponentCounter(const MatchGraph& g, const std::vector<VertexId>& order, std::size_t max_states)
        : n_(order.size()), max_states_(max_states) {
        std::map<VertexId, std::size_t> pos;
        for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = i;
        nbr_.resize(n_);
        mask_.assign(n_, Bits(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            for (auto& [v, w] : g.neighbors(order[i])) {
                std::size_t j = pos.at(v);
                nbr_[i].push_back({j, w});
                mask_[i].set(j);
            }
            std::sort(nbr_[i].begin(), nbr_[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }

    Rational run() {
        Bits all(n_);
        for (std::size_t i = 0; i < n_; ++i) all.set(i);
        return solve(all);
    }

private:
    bool isolated(const Bits& rest, std::size_t w) const { return !mask_[w].intersects(rest); }

    Rational solve(const Bits& rest) {
        std::size_t v = rest.first();
        if (v == SIZE_MAX) return 1;
        auto it = memo_.find(rest);
        if (it != memo_.end()) return it->second;
        Rational total = 0;
        for (auto& [u, w] : nbr_[v]) {
            if (!rest.test(u)) continue;
            Bits next = rest;
            next.reset(v);
            next.reset(u);
            bool dead = false;
            for (auto* side : {&nbr_[v], &nbr_[u]}) {
                for (auto& [x, _] : *side)
                    if (next.test(x) && isolated(next, x)) {
                        dead = true;
                        break;
                    }
                if (dead) break;
            }
            if (dead) continue;
            Rational sub = solve(next);
            if (sub != 0) total += w * sub;
        }
        if (max_states_ && memo_.size() >= max_states_) throw ResourceLimit("matching counter state budget exceeded");
        memo_.emplace(rest, total);
        return total;
    }

    std::size_t n_;
    std::size_t max_states_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> nbr_;
    std::vector<Bits> mask_;
    std::unordered_map<Bits, Rational, BitsHash> memo_;
};

}  // namespace detail

/// Exact weighted perfect-matching count. Factors over components, rejects odd or
/// unbalanced components, then runs an elimination along a narrow sweep order with
/// the residual vertex set as memo key.
inline Rational count_matchings(const MatchGraph& g, const CountOptions& opt = {}) {
    if (opt.max_vertices && g.num_vertices() > opt.max_vertices)
        throw ResourceLimit("graph exceeds counter vertex budget");
    Rational result = 1;
    auto side = g.bipartition();
    for (auto& comp : detail::components(g)) {
        if (comp.size() % 2) return 0;
        if (side) {
            std::size_t zeros = 0;
            for (VertexId v : comp) zeros += (*side)[v] == 0;
            if (2 * zeros != comp.size()) return 0;
        }
        for (VertexId v : comp)
            if (g.degree(v) == 0) return 0;
        detail::ComponentCounter cc(g, detail::sweep_order(g, comp), opt.max_states);
        Rational c = cc.run();
        if (c == 0) return 0;
        result *= c;
    }
    return result;
}

/// Brute-force enumeration: match the lowest-id free vertex with each free neighbor.
inline Rational count_matchings_oracle(const MatchGraph& g, std::size_t max_vertices = 40) {
    if (max_vertices && g.num_vertices() > max_vertices)
        throw ResourceLimit("graph exceeds oracle vertex bound");
    auto ids = g.vertex_ids();
    std::size_t n = ids.size();
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[ids[i]] = i;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> nbr(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [v, w] : g.neighbors(ids[i])) nbr[i].push_back({pos[v], w});
    std::vector<char> used(n, 0);
    std::function<Rational(std::size_t)> rec = [&](std::size_t from) -> Rational {
        while (from < n && used[from]) ++from;
        if (from == n) return 1;
        used[from] = 1;
        Rational total = 0;
        for (auto& [j, w] : nbr[from]) {
            if (used[j]) continue;
            used[j] = 1;
            total += w * rec(from + 1);
            used[j] = 0;
        }
        used[from] = 0;
        return total;
    };
    return rec(0);
}

enum class SplitVerdict { Factor, Zero, Inapplicable };

/// Graph splitting test on an induced subgraph H of a bipartite graph g.
/// Uses declared classes when every vertex has one, otherwise a computed 2-coloring.
inline SplitVerdict split_verdict(const MatchGraph& g, const std::vector<VertexId>& sub) {
    std::map<VertexId, int> cls;
    if (g.all_classified()) {
        if (!g.classes_consistent()) throw NotBipartite("declared classes are not a proper coloring");
        for (VertexId v : g.vertex_ids()) cls[v] = *g.data(v).cls;
    } else {
        auto side = g.bipartition();
        if (!side) throw NotBipartite("graph is not bipartite");
        cls = *side;
    }
    std::set<VertexId> in(sub.begin(), sub.end());
    for (VertexId v : in)
        if (!g.has_vertex(v)) throw BadLocus("subgraph vertex not in graph");
    std::map<int, std::size_t> count;
    std::map<int, bool> leaks;
    for (VertexId v : in) {
        count[cls[v]]++;
        for (auto& [w, _] : g.neighbors(v))
            if (!in.count(w)) leaks[cls[v]] = true;
    }
    std::set<int> labels;
    for (auto& [_, c] : cls) labels.insert(c);
    for (int sealed : labels) {
        if (leaks[sealed]) continue;
        std::size_t s = count[sealed], o = 0;
        for (int other : labels)
            if (other != sealed) o += count[other];
        if (s == o) return SplitVerdict::Factor;
        if (s > o) return SplitVerdict::Zero;
    }
    return SplitVerdict::Inapplicable;
}

}  // namespace hybridtile
