#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hybridtile/hybridtile.hpp"

namespace fixtures {

using namespace hybridtile;

inline Rational random_weight(std::mt19937& rng) {
    static const Rational weights[] = {1, Rational(1, 2), 2, 3};
    return weights[rng() % 4];
}

/// Erdos-Renyi graph on n vertices with weights from {1, 1/2, 2, 3}.
inline MatchGraph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    MatchGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j, random_weight(rng));
    return g;
}

/// The block glued along its attachment list to a random host with `extra` further vertices.
/// Host vertices sit far below the block so row-based matching never confuses them.
inline MatchGraph host_with_block(std::mt19937& rng, const BlockPattern& b, int extra, double p) {
    int n = static_cast<int>(b.attach.size()) + extra;
    std::bernoulli_distribution coin(p);
    MatchGraph host;
    for (int i = 0; i < n; ++i) host.add_vertex(i, VertexData{std::nullopt, 100 + i, -1000});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) host.add_edge(i, j, random_weight(rng));
    std::vector<VertexId> glue;
    for (int i = 0; i < static_cast<int>(b.attach.size()); ++i) glue.push_back(i);
    host.set_boundary("glue", glue);
    MatchGraph block = b.graph;
    block.set_boundary("glue", b.attach);
    return connected_sum(block, host, "glue", "glue");
}

/// Calls fn on every nonempty sequence of positive integers with sum <= max_sum and length <= max_len.
inline void sequences(int max_sum, int max_len, bool odd_only, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (!cur.empty()) fn(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = 1; x <= left; ++x) {
            if (odd_only && x % 2 == 0) continue;
            cur.push_back(x);
            rec(left - x);
            cur.pop_back();
        }
    };
    rec(max_sum);
}

inline std::vector<std::vector<int>> all_sequences(int max_sum, int max_len, bool odd_only = false) {
    std::vector<std::vector<int>> out;
    sequences(max_sum, max_len, odd_only, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

inline std::optional<Region> try_build(const RegionParams& p) {
    try {
        return build_region(p);
    } catch (const BoundaryIntersection&) {
        return std::nullopt;
    }
}

}  // namespace fixtures
