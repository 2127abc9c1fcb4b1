#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dual.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace hybridtile {

/// Exponent e with r = 2^e, if r is a power of two.
inline std::optional<long> power_of_two_exponent(const Rational& r) {
    if (r <= 0) return std::nullopt;
    auto log2_exact = [](const Integer& z) -> std::optional<long> {
        if (z <= 0) return std::nullopt;
        if (mpz_popcount(z.get_mpz_t()) != 1) return std::nullopt;
        return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
    };
    auto n = log2_exact(r.get_num()), d = log2_exact(r.get_den());
    if (!n || !d) return std::nullopt;
    return *n - *d;
}

/// Contract: M(before) = mu * M(after).
struct RewriteStep {
    std::string name;
    MatchGraph before;
    MatchGraph after;
    Rational mu = 1;
    std::optional<long> exponent;  ///< set when mu is a power of two
    std::vector<VertexId> locus;
};

/// Aztec rectangle AR_{m2/2, n}; odd m2 means baseless.
struct ARShape {
    int m2 = 0;
    int n = 0;

    bool baseless() const { return m2 % 2 != 0; }
    bool operator==(const ARShape&) const = default;
};

inline std::string to_string(const ARShape& s) {
    std::string m = std::to_string(s.m2 / 2) + (s.baseless() ? ".5" : "");
    return "AR_{" + m + "," + std::to_string(s.n) + "}";
}

struct TransformTrace {
    std::vector<RewriteStep> steps;
    Rational mu = 1;
    MatchGraph result;
    std::vector<ARShape> terminal;

    void push(RewriteStep s) {
        mu *= s.mu;
        result = s.after;
        steps.push_back(std::move(s));
    }

    void append(const TransformTrace& t) {
        for (const auto& s : t.steps) push(s);
        terminal.insert(terminal.end(), t.terminal.begin(), t.terminal.end());
    }

    std::optional<long> exponent() const { return power_of_two_exponent(mu); }
};

namespace detail {

inline RewriteStep make_step(std::string name, const MatchGraph& before, MatchGraph after, const Rational& mu,
                             std::vector<VertexId> locus) {
    RewriteStep s{std::move(name), before, std::move(after), mu, power_of_two_exponent(mu), std::move(locus)};
    std::sort(s.locus.begin(), s.locus.end());
    return s;
}

inline void require_vertex(const MatchGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw BadLocus("vertex " + std::to_string(v) + " is not in the graph");
}

inline int flip_class(int c) { return c == kBlack ? kWhite : c == kWhite ? kBlack : c; }

/// Coordinates after reflecting by sym: bit 0 flips x, bit 1 flips y.
inline std::pair<long, long> reflect(long x, long y, int sym) {
    return {(sym & 1) ? -x : x, (sym & 2) ? -y : y};
}

/// Rows from top to bottom, each left to right, in the reflected frame.
inline std::vector<std::vector<VertexId>> rows_by_y(const MatchGraph& g, const std::vector<VertexId>& ids, int sym) {
    std::map<long, std::vector<std::pair<long, VertexId>>, std::greater<>> rows;
    for (VertexId v : ids) {
        const auto& d = g.data(v);
        if (!d.x || !d.y) throw BadLocus("locus vertices need planar coordinates");
        auto [x, y] = reflect(*d.x, *d.y, sym);
        rows[y].push_back({x, v});
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& [_, row] : rows) {
        std::sort(row.begin(), row.end());
        std::vector<VertexId> ids_row;
        for (auto& [x, v] : row) ids_row.push_back(v);
        out.push_back(std::move(ids_row));
    }
    return out;
}

struct BlockMatch {
    std::map<VertexId, VertexId> to_g;  // pattern id -> host id
    int sym = 0;
};

/// Finds the row-by-row correspondence between a pattern and a host locus. Pattern
/// vertices outside `attach` must have all their host neighbors inside the locus, and the
/// edges touching them must agree exactly, weights included.
inline std::optional<BlockMatch> try_match(const MatchGraph& g, const std::vector<VertexId>& locus,
                                           const MatchGraph& pattern, const std::vector<VertexId>& attach) {
    std::set<VertexId> att(attach.begin(), attach.end());
    auto prow = rows_by_y(pattern, pattern.vertex_ids(), 0);
    std::set<VertexId> image(locus.begin(), locus.end());
    for (int sym = 0; sym < 4; ++sym) {
        auto grow = rows_by_y(g, locus, sym);
        if (grow.size() != prow.size()) continue;
        bool ok = true;
        BlockMatch m{{}, sym};
        for (std::size_t i = 0; ok && i < prow.size(); ++i) {
            if (grow[i].size() != prow[i].size()) ok = false;
            for (std::size_t j = 0; ok && j < prow[i].size(); ++j) m.to_g[prow[i][j]] = grow[i][j];
        }
        if (!ok) continue;
        std::map<VertexId, VertexId> back;
        for (auto& [p, h] : m.to_g) back[h] = p;
        for (VertexId p : pattern.vertex_ids()) {
            if (att.count(p)) continue;
            VertexId h = m.to_g[p];
            if (g.degree(h) != pattern.degree(p)) {
                ok = false;
                break;
            }
            for (auto& [hn, w] : g.neighbors(h)) {
                if (!image.count(hn)) {
                    ok = false;
                    break;
                }
                VertexId pn = back[hn];
                if (!pattern.has_edge(p, pn) || pattern.weight(p, pn) != w) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return m;
    }
    return std::nullopt;
}

inline BlockMatch match_block(const MatchGraph& g, const std::vector<VertexId>& locus, const MatchGraph& pattern,
                              const std::vector<VertexId>& attach, const std::string& what) {
    std::set<VertexId> seen;
    for (VertexId v : locus) {
        require_vertex(g, v);
        if (!seen.insert(v).second) throw BadLocus("repeated vertex in locus");
    }
    if (locus.size() != pattern.num_vertices())
        throw PatternMismatch(what + ": locus has " + std::to_string(locus.size()) + " vertices, pattern has " +
                              std::to_string(pattern.num_vertices()));
    auto m = try_match(g, locus, pattern, attach);
    if (!m) throw PatternMismatch(what + ": locus does not match the pattern");
    return *m;
}

/// Replaces the interior of a matched pattern by `repl`, gluing repl_attach[i] onto the
/// host vertex matched to attach[i]. New vertices are placed by the scale of the match.
inline MatchGraph replace_block(const MatchGraph& g, const BlockMatch& m, const MatchGraph& pattern,
                                const std::vector<VertexId>& attach, const MatchGraph& repl,
                                const std::vector<VertexId>& repl_attach) {
    if (attach.size() != repl_attach.size()) throw std::logic_error("replace_block: attach lists differ in length");
    MatchGraph out = g;
    std::set<VertexId> att(attach.begin(), attach.end());
    for (VertexId p : pattern.vertex_ids())
        if (!att.count(p)) out.remove_vertex(m.to_g.at(p));

    // scale of the match in the reflected frame, from the extreme pattern rows and widest row
    auto prow = rows_by_y(pattern, pattern.vertex_ids(), 0);
    auto frame = [&](VertexId h) { return reflect(*g.data(h).x, *g.data(h).y, m.sym); };
    long sy = 1, sx = 1;
    if (prow.size() > 1) {
        long dp = *pattern.data(prow.front()[0]).y - *pattern.data(prow.back()[0]).y;
        long dg = frame(m.to_g.at(prow.front()[0])).second - frame(m.to_g.at(prow.back()[0])).second;
        sy = std::max(1L, (dg + dp / 2) / dp);
    }
    for (const auto& row : prow)
        if (row.size() > 1) {
            long dp = *pattern.data(row.back()).x - *pattern.data(row.front()).x;
            long dg = frame(m.to_g.at(row.back())).first - frame(m.to_g.at(row.front())).first;
            if (dp > 0 && dg > 0) sx = std::max(1L, (dg + dp / 2) / dp);
            break;
        }

    std::map<VertexId, VertexId> rmap;
    for (std::size_t i = 0; i < repl_attach.size(); ++i) rmap[repl_attach[i]] = m.to_g.at(attach[i]);

    bool flip = false;
    if (!repl_attach.empty()) {
        auto rc = repl.data(repl_attach[0]).cls, gc = g.data(rmap[repl_attach[0]]).cls;
        flip = rc && gc && *rc != *gc;
    }
    VertexId anchor_r = repl_attach.empty() ? repl.vertex_ids().front() : repl_attach[0];
    VertexId anchor_g = repl_attach.empty() ? m.to_g.begin()->second : rmap[anchor_r];
    auto [ax, ay] = frame(anchor_g);
    for (VertexId r : repl.vertex_ids()) {
        if (rmap.count(r)) continue;
        const auto& rd = repl.data(r);
        VertexData d;
        if (rd.cls) d.cls = flip ? flip_class(*rd.cls) : *rd.cls;
        if (rd.x && rd.y && repl.data(anchor_r).x) {
            long fx = ax + sx * (*rd.x - *repl.data(anchor_r).x);
            long fy = ay + sy * (*rd.y - *repl.data(anchor_r).y);
            auto [x, y] = reflect(fx, fy, m.sym);
            d.x = x;
            d.y = y;
        }
        rmap[r] = out.add_vertex(d);
    }
    for (const auto& e : repl.edges()) out.accumulate_edge(rmap[e.u], rmap[e.v], e.weight);
    if (!out.classes_consistent())
        for (VertexId v : out.vertex_ids()) out.data(v).cls.reset();
    return out;
}

inline RewriteStep block_rewrite(const std::string& name, const MatchGraph& g, const std::vector<VertexId>& locus,
                                 const MatchGraph& pattern, const std::vector<VertexId>& attach,
                                 const MatchGraph& repl, const std::vector<VertexId>& repl_attach,
                                 const Rational& mu) {
    auto m = match_block(g, locus, pattern, attach, name);
    return make_step(name, g, replace_block(g, m, pattern, attach, repl, repl_attach), mu, locus);
}

inline std::vector<VertexId> concat_ids(std::vector<VertexId> a, const std::vector<VertexId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

/// True if g, read row by row, is the same weighted graph as pattern.
inline bool same_layout(const MatchGraph& g, const MatchGraph& pattern) {
    if (g.num_vertices() != pattern.num_vertices()) return false;
    return detail::try_match(g, g.vertex_ids(), pattern, {}).has_value();
}

/// v becomes v' (keeping id v, neighbors H), v'' (the other neighbors) and a middle
/// vertex x joined to both by unit edges.
inline RewriteStep vertex_split(const MatchGraph& g, VertexId v, const std::vector<VertexId>& H) {
    detail::require_vertex(g, v);
    for (VertexId u : H)
        if (!g.has_edge(v, u)) throw BadLocus("split set must consist of neighbors");
    std::set<VertexId> keep(H.begin(), H.end());
    MatchGraph out = g;
    const auto& d = g.data(v);
    VertexData xd = d, wd = d;
    if (d.cls) xd.cls = detail::flip_class(*d.cls);
    VertexId x = out.add_vertex(xd);
    VertexId w = out.add_vertex(wd);
    for (auto& [u, wt] : g.neighbors(v))
        if (!keep.count(u)) {
            out.remove_edge(v, u);
            out.add_edge(w, u, wt);
        }
    out.add_edge(v, x);
    out.add_edge(x, w);
    return detail::make_step("vertex_split", g, std::move(out), 1, {v, x, w});
}

inline RewriteStep star_scale(const MatchGraph& g, VertexId v, const Rational& t) {
    detail::require_vertex(g, v);
    if (t <= 0) throw InvalidParams("star_scale factor must be positive");
    MatchGraph out = g;
    for (auto& [u, w] : g.neighbors(v)) out.set_weight(v, u, w * t);
    Rational mu = 1 / t;
    return detail::make_step("star", g, std::move(out), mu, {v});
}

enum class SpiderKind { a, b, c };

namespace detail {

/// The unique neighbor of v outside `inner`, which must be joined by a unit edge.
inline VertexId leg_of(const MatchGraph& g, VertexId v, const std::set<VertexId>& inner) {
    std::optional<VertexId> leg;
    for (auto& [u, w] : g.neighbors(v)) {
        if (inner.count(u)) continue;
        if (leg || w != 1) throw PatternMismatch("spider: inner vertex needs exactly one unit leg");
        leg = u;
    }
    if (!leg) throw PatternMismatch("spider: inner vertex has no leg");
    return *leg;
}

}  // namespace detail

/// Local replacements. Kind a: inner 4-cycle locus {a,b,c,d} in cyclic order, weights
/// x=ab, y=bc, z=cd, t=da, legs A..D become the cycle A-B-C-D with weights z,t,x,y over
/// xz+yt. Kind b: inner path {a,b,c} with x=ab, y=bc and legs A,B,C. Kind c: inner edge
/// {a,b} of weight x with legs A,B.
inline RewriteStep spider(const MatchGraph& g, const std::vector<VertexId>& locus, SpiderKind kind) {
    std::size_t need = kind == SpiderKind::a ? 4 : kind == SpiderKind::b ? 3 : 2;
    if (locus.size() != need) throw BadLocus("spider: wrong locus size");
    for (VertexId v : locus) detail::require_vertex(g, v);
    std::set<VertexId> inner(locus.begin(), locus.end());
    if (inner.size() != need) throw BadLocus("spider: repeated vertex in locus");
    auto edge = [&](VertexId u, VertexId v) {
        if (!g.has_edge(u, v)) throw PatternMismatch("spider: missing inner edge");
        return g.weight(u, v);
    };
    std::size_t inner_edges = 0;
    for (VertexId v : locus)
        for (auto& [u, _] : g.neighbors(v)) inner_edges += inner.count(u);
    std::size_t expected = kind == SpiderKind::a ? 8 : kind == SpiderKind::b ? 4 : 2;
    if (inner_edges != expected) throw PatternMismatch("spider: inner vertices have extra edges");

    std::vector<VertexId> legs;
    for (VertexId v : locus) legs.push_back(detail::leg_of(g, v, inner));
    if (std::set<VertexId>(legs.begin(), legs.end()).size() != legs.size())
        throw PatternMismatch("spider: legs must be distinct");

    MatchGraph out = g;
    for (VertexId v : locus) out.remove_vertex(v);
    Rational mu;
    if (kind == SpiderKind::a) {
        Rational x = edge(locus[0], locus[1]), y = edge(locus[1], locus[2]), z = edge(locus[2], locus[3]),
                 t = edge(locus[3], locus[0]);
        mu = x * z + y * t;
        out.accumulate_edge(legs[0], legs[1], z / mu);
        out.accumulate_edge(legs[1], legs[2], t / mu);
        out.accumulate_edge(legs[2], legs[3], x / mu);
        out.accumulate_edge(legs[3], legs[0], y / mu);
    } else if (kind == SpiderKind::b) {
        Rational x = edge(locus[0], locus[1]), y = edge(locus[1], locus[2]);
        mu = 2;
        VertexData dd;
        if (g.data(legs[1]).cls) dd.cls = *g.data(legs[1]).cls;
        dd.x = g.data(locus[1]).x;
        dd.y = g.data(locus[1]).y;
        VertexId D = out.add_vertex(dd);
        out.accumulate_edge(legs[0], D, y / 2);
        out.accumulate_edge(D, legs[2], x / 2);
        out.accumulate_edge(legs[0], legs[1], 1 / (2 * x));
        out.accumulate_edge(legs[1], legs[2], 1 / (2 * y));
    } else {
        Rational x = edge(locus[0], locus[1]);
        mu = 2;
        VertexData cd = g.data(locus[0]), dd = g.data(locus[1]);
        VertexId C = out.add_vertex(cd);
        VertexId D = out.add_vertex(dd);
        out.accumulate_edge(C, D, x / 2);
        out.accumulate_edge(legs[0], D, Rational(1, 2));
        out.accumulate_edge(legs[1], C, Rational(1, 2));
        out.accumulate_edge(legs[0], legs[1], 1 / (2 * x));
    }
    if (!out.classes_consistent())
        for (VertexId v : out.vertex_ids()) out.data(v).cls.reset();
    static const char* names[] = {"spider_a", "spider_b", "spider_c"};
    return detail::make_step(names[static_cast<int>(kind)], g, std::move(out), mu, locus);
}

/// Pattern graphs with their attachment lists, shared by the rewrites and by fixtures.
struct BlockPattern {
    MatchGraph graph;
    std::vector<VertexId> attach;
};

inline BlockPattern t1_pattern(int p, int q) {
    auto g = comb(aztec_rectangle(p, q), "bottom", CombSide::bottom);
    return {g, g.boundary("tips")};
}

inline BlockPattern t2_pattern(int p, int q) {
    auto g = comb(aztec_rectangle(p, q, ARVariant::baseless), "bottom", CombSide::bottom);
    return {g, g.boundary("tips")};
}

inline BlockPattern t3_pattern(int m, int n) {
    auto g = comb(side_trimmed(m, n, TrimKind::LR), "top", CombSide::top);
    return {g, detail::concat_ids(g.boundary("tips"), g.boundary("bottom"))};
}

inline BlockPattern t3_result(int m, int n) {
    auto g = comb(side_trimmed(m, n, TrimKind::RR), "bottom", CombSide::bottom);
    return {g, detail::concat_ids(g.boundary("top"), g.boundary("tips"))};
}

inline BlockPattern bottom_attached(MatchGraph g) {
    auto list = g.boundary("bottom");
    return {std::move(g), std::move(list)};
}

inline BlockPattern combed_bottom(MatchGraph g) {
    g = comb(std::move(g), "bottom", CombSide::bottom);
    auto list = g.boundary("tips");
    return {std::move(g), std::move(list)};
}

/// comb(AR_{p,q}) along its tips  ->  AR_{p-1/2,q-1} along its bottom row; mu = 2^p.
inline RewriteStep t1(const MatchGraph& g, int p, int q, const std::vector<VertexId>& locus) {
    if (p < 1 || q < 1) throw PreconditionFailed("t1 needs p, q >= 1");
    auto pat = t1_pattern(p, q);
    auto rep = bottom_attached(aztec_rectangle(p, q - 1, ARVariant::baseless));
    return detail::block_rewrite("t1", g, locus, pat.graph, pat.attach, rep.graph, rep.attach, pow2(p));
}

/// comb(AR_{p-1/2,q}) along its tips  ->  AR_{p,q+1} along its bottom row; mu = 2^-p.
inline RewriteStep t2(const MatchGraph& g, int p, int q, const std::vector<VertexId>& locus) {
    if (p < 1 || q < 1) throw PreconditionFailed("t2 needs p, q >= 1");
    auto pat = t2_pattern(p, q);
    auto rep = bottom_attached(aztec_rectangle(p, q + 1));
    return detail::block_rewrite("t2", g, locus, pat.graph, pat.attach, rep.graph, rep.attach, pow2(-p));
}

/// LR_{m,n} combed on top, attached along tips then bottom row  ->  RR_{m,n} combed on
/// the bottom, attached along top row then tips; mu = 1.
inline RewriteStep t3(const MatchGraph& g, int m, int n, const std::vector<VertexId>& locus) {
    if (m < 1 || n < 1) throw PreconditionFailed("t3 needs m, n >= 1");
    auto pat = t3_pattern(m, n);
    auto rep = t3_result(m, n);
    return detail::block_rewrite("t3", g, locus, pat.graph, pat.attach, rep.graph, rep.attach, 1);
}

enum class LTransformKind { a, b, c };

/// Kind a: L^{a,b}_{c,d} -> comb(bot(L^{a+1,b+1}_{c,d})), mu = 2^-a.
/// Kind b: Lbar^{a,b}_{c,d} -> comb(bot(Lbar^{a-1,b-1}_{c+1,d})), mu = 2^{a-1}, a > 1.
/// Kind c: Lbar^{1,b}_{c,d} -> comb(bot(L^{1,d-b}_{c,d})), mu = 1, b < d.
/// All blocks attach along their bottommost vertices.
inline RewriteStep l_transform(const MatchGraph& g, LTransformKind kind, int a, int b, int c, int d,
                               const std::vector<VertexId>& locus) {
    if (a < 1 || b < 1 || c < 1 || d < 1) throw InvalidParams("l_transform: parameters must be positive");
    BlockPattern pat, rep;
    Rational mu = 1;
    std::string name;
    switch (kind) {
        case LTransformKind::a:
            pat = bottom_attached(l_shaped(a, b, c, d, LKind::L));
            rep = combed_bottom(bot(l_shaped(a + 1, b + 1, c, d, LKind::L)));
            mu = pow2(-a);
            name = "l_transform_a";
            break;
        case LTransformKind::b:
            if (a <= 1 || b <= 1) throw PreconditionFailed("l_transform b needs a > 1 and b > 1");
            pat = bottom_attached(l_shaped(a, b, c, d, LKind::Lbar));
            rep = combed_bottom(bot(l_shaped(a - 1, b - 1, c + 1, d, LKind::Lbar)));
            mu = pow2(a - 1);
            name = "l_transform_b";
            break;
        case LTransformKind::c:
            if (a != 1 || b >= d) throw PreconditionFailed("l_transform c needs a = 1 and b < d");
            pat = bottom_attached(l_shaped(1, b, c, d, LKind::Lbar));
            rep = combed_bottom(bot(l_shaped(1, d - b, c, d, LKind::L)));
            name = "l_transform_c";
            break;
    }
    return detail::block_rewrite(name, g, locus, pat.graph, pat.attach, rep.graph, rep.attach, mu);
}

enum class Side { upper, lower };

namespace detail {

inline std::vector<VertexId> vertices_where(const MatchGraph& g, const std::function<bool(long)>& pred) {
    std::vector<VertexId> out;
    for (VertexId v : g.vertex_ids())
        if (g.data(v).y && pred(*g.data(v).y)) out.push_back(v);
    return out;
}

/// Rows and innermost-row width of a block, reading rows away from the outer side.
inline std::pair<int, int> block_shape(const MatchGraph& g, const std::vector<VertexId>& block, int s) {
    std::map<long, int> rows;
    for (VertexId v : block) rows[s * *g.data(v).y]++;
    if (rows.empty()) throw PatternMismatch("composite: empty layer");
    return {static_cast<int>(rows.size()), rows.begin()->second};
}

inline ARShape shape_of(int rows, int width) {
    return rows % 2 ? ARShape{rows - 1, width} : ARShape{rows - 1, width - 1};
}

inline MatchGraph ar_of(const ARShape& s) {
    return s.baseless() ? aztec_rectangle((s.m2 + 1) / 2, s.n, ARVariant::baseless) : aztec_rectangle(s.m2 / 2, s.n);
}

}  // namespace detail

/// Peels the layers of one side of a region dual, outermost first, by t1 (odd row
/// count) or t2 (even row count). g must carry the dual coordinates of r on that side.
/// The remaining block is checked against an Aztec rectangle and recorded as terminal.
inline TransformTrace composite(const MatchGraph& g, const Region& r, Side side) {
    if (side == Side::lower && r.params.kind == RegionKind::douglas)
        throw InvalidParams("composite: Douglas regions have no lower side");
    int s = side == Side::upper ? 1 : -1;
    int outer = side == Side::upper ? r.top : r.bottom;
    int inner = side == Side::upper ? (r.params.kind == RegionKind::douglas ? r.bottom : r.ell) : r.ell_prime;
    std::vector<int> cuts;
    for (int c : r.diagonals)
        if (s * c < s * outer && s * c > s * inner) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end(), [&](int x, int y) { return s * x > s * y; });

    TransformTrace trace;
    trace.result = g;
    for (int c : cuts) {
        const MatchGraph& cur = trace.result;
        auto layer = detail::vertices_where(cur, [&](long y) { return s * y > s * 3L * c; });
        auto tips = detail::vertices_where(cur, [&](long y) { return y == 3L * c - s; });
        auto [rows, width] = detail::block_shape(cur, layer, s);
        auto locus = detail::concat_ids(layer, tips);
        if (rows % 2)
            trace.push(t1(cur, (rows - 1) / 2, width, locus));
        else
            trace.push(t2(cur, rows / 2, width - 1, locus));
    }
    auto block = detail::vertices_where(trace.result, [&](long y) { return s * y > s * 3L * inner; });
    auto [rows, width] = detail::block_shape(trace.result, block, s);
    ARShape shape = detail::shape_of(rows, width);
    auto pat = bottom_attached(detail::ar_of(shape));
    detail::match_block(trace.result, block, pat.graph, pat.attach, "composite terminal");
    trace.terminal.push_back(shape);
    return trace;
}

namespace detail {

/// Rescales y so there is room for new rows between existing ones.
inline MatchGraph stretch_y(MatchGraph g, long factor) {
    for (VertexId v : g.vertex_ids())
        if (g.data(v).y) *g.data(v).y *= factor;
    return g;
}

inline MatchGraph mirrored(MatchGraph g) {
    for (VertexId v : g.vertex_ids()) {
        auto& d = g.data(v);
        if (d.x) *d.x = -*d.x;
        if (d.y) *d.y = -*d.y;
    }
    detail::refresh_rows(g);
    return g;
}

}  // namespace detail

/// comb(AR_{h-1/2,q-1}) glued by its tips to the bottom row of a mirrored AR_{h'-1/2,q-1}.
inline MatchGraph combed_pair(int h, int hp, int q) {
    auto up = comb(aztec_rectangle(h, q - 1, ARVariant::baseless), "bottom", CombSide::bottom);
    auto low = detail::mirrored(aztec_rectangle(hp, q - 1, ARVariant::baseless));
    low.set_boundary("glue", low.boundary("top"));
    auto g = connected_sum(up, low, "tips", "glue");
    g.clear_boundaries();
    detail::refresh_rows(g);
    return g;
}

/// Upper and lower composites on a quasi-hexagon dual. When both terminals are full
/// Aztec rectangles, the rows resting on ell are split and both ends reduced by t1, so the
/// result is always comb(AR_{h-1/2,q-1}) # AR_{h'-1/2,q-1}.
inline TransformTrace replay_quasi_hexagon(const Region& r) {
    if (r.params.kind == RegionKind::douglas) throw InvalidParams("quasi-hexagon pipeline needs a quasi-hexagon");
    MatchGraph g = dual_graph(r);
    TransformTrace trace;
    trace.result = g;
    auto up = composite(g, r, Side::upper);
    trace.append(up);
    auto low = composite(trace.result, r, Side::lower);
    trace.append(low);
    if (r.params.kind != RegionKind::symmetric) return trace;

    ARShape a = trace.terminal[0], b = trace.terminal[1];
    if (a.baseless() != b.baseless()) throw PatternMismatch("quasi-hexagon: terminal blocks of different kinds");
    if (!a.baseless()) {
        const long k = 4;
        MatchGraph cur = detail::stretch_y(trace.result, k);
        long row_y = k * (3L * r.ell + 1);
        auto resting = detail::vertices_where(cur, [&](long y) { return y == row_y; });
        std::vector<VertexId> xs, ws;
        for (VertexId v : resting) {
            std::vector<VertexId> H;
            for (auto& [u, _] : cur.neighbors(v))
                if (*cur.data(u).y > row_y) H.push_back(u);
            auto step = vertex_split(cur, v, H);
            VertexId x = step.locus[1], w = step.locus[2];
            *step.after.data(x).y = row_y - 2;
            *step.after.data(w).y = row_y - 4;
            xs.push_back(x);
            ws.push_back(w);
            cur = step.after;
            trace.push(std::move(step));
        }
        auto upper = detail::vertices_where(cur, [&](long y) { return y >= row_y; });
        trace.push(t1(cur, a.m2 / 2, a.n, detail::concat_ids(upper, xs)));
        cur = trace.result;
        long low_row = row_y - 4;
        auto lower = detail::vertices_where(cur, [&](long y) { return y < low_row; });
        trace.push(t1(cur, b.m2 / 2, b.n, detail::concat_ids(lower, ws)));
        a = ARShape{a.m2 - 1, a.n - 1};
        b = ARShape{b.m2 - 1, b.n - 1};
    }
    if (!same_layout(trace.result, combed_pair((a.m2 + 1) / 2, (b.m2 + 1) / 2, a.n + 1)))
        throw PatternMismatch("quasi-hexagon: result is not a combed pair of baseless Aztec rectangles");
    trace.terminal = {a, b};
    return trace;
}

/// Layer peeling of a Douglas region down to a single Aztec rectangle.
inline TransformTrace replay_douglas(const Region& r) {
    if (r.params.kind != RegionKind::douglas) throw InvalidParams("Douglas pipeline needs a Douglas region");
    return composite(dual_graph(r), r, Side::upper);
}

}  // namespace hybridtile
