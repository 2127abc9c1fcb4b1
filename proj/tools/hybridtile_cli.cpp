// Command-line front end for the hybridtile library.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hybridtile/hybridtile.hpp"
#include "hybridtile/json_io.hpp"

using namespace hybridtile;

namespace {

enum Exit { ok = 0, invalid = 2, mismatch = 3, resource = 4 };

struct RegionFlags {
    std::string file;
    std::string kind = "symmetric";
    int a = 1;
    std::vector<int> d, c, dp;

    void add(CLI::App* app) {
        app->add_option("--region", file, "region JSON file (overrides the flags below)");
        app->add_option("--kind", kind, "symmetric, douglas or asymmetric");
        app->add_option("--a", a, "side length a");
        app->add_option("--d", d, "upper distances, e.g. 4,4,3")->delimiter(',');
        app->add_option("--c", c, "middle distances (asymmetric)")->delimiter(',');
        app->add_option("--dp", dp, "lower distances")->delimiter(',');
    }

    bool given() const { return !file.empty() || !d.empty(); }

    Region build() const {
        if (!file.empty()) return region_from_json(read_json(file));
        return build_region({region_kind_from(kind), a, d, c, dp});
    }

    static Json read_json(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidParams("cannot open " + path);
        try {
            return Json::parse(in);
        } catch (const Json::exception& e) {
            throw InvalidParams(path + ": " + e.what());
        }
    }
};

struct Common {
    std::string out;
    std::string format = "text";
    std::size_t max_oracle = 40;
    unsigned seed = 1;
};

void emit(const Common& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidParams("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

Json stats_json(const Region& r) {
    auto st = region_stats(r);
    return {{"h", st.h},
            {"h_prime", st.h_prime},
            {"m", st.m},
            {"n", st.n},
            {"C", st.C},
            {"C_prime", st.C_prime},
            {"q", st.q},
            {"bottom_row_color", to_string(st.bottom_row_color)},
            {"h0", st.h0},
            {"Phi", st.Phi},
            {"phi", st.phi},
            {"layer_widths", st.layer_widths},
            {"layer_types", st.layer_types},
            {"cells", r.cells.size()}};
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidParams("not an integer: " + tok);
        }
    }
    return out;
}

int arg(const std::vector<int>& xs, std::size_t i, const std::string& what) {
    if (i >= xs.size()) throw InvalidParams(what + ": missing argument " + std::to_string(i + 1));
    return xs[i];
}

void require_count(const std::vector<int>& xs, std::size_t n, const std::string& what) {
    if (xs.size() != n) throw InvalidParams(what + " takes " + std::to_string(n) + " arguments");
}

ARVariant ar_variant(const std::string& s) {
    if (s.empty() || s == "plain") return ARVariant::plain;
    if (s == "baseless") return ARVariant::baseless;
    if (s == "combed") return ARVariant::combed;
    if (s == "combed_baseless") return ARVariant::combed_baseless;
    throw InvalidParams("unknown Aztec rectangle variant " + s);
}

MatchGraph build_family(const std::string& family, const std::vector<int>& p, const std::string& variant) {
    if (family == "aztec_rectangle") {
        require_count(p, 2, family);
        return aztec_rectangle(p[0], p[1], ar_variant(variant));
    }
    if (family == "aztec_diamond") {
        require_count(p, 1, family);
        return aztec_rectangle(p[0], p[0]);
    }
    if (family == "side_trimmed") {
        require_count(p, 2, family);
        TrimKind k = variant == "RR" ? TrimKind::RR : variant == "TLR" ? TrimKind::TLR : TrimKind::LR;
        if (!variant.empty() && variant != "LR" && variant != "RR" && variant != "TLR")
            throw InvalidParams("side_trimmed variant must be LR, RR or TLR");
        return side_trimmed(p[0], p[1], k);
    }
    if (family == "l_shaped") {
        require_count(p, 4, family);
        if (!variant.empty() && variant != "L" && variant != "Lbar") throw InvalidParams("l_shaped variant must be L or Lbar");
        return l_shaped(p[0], p[1], p[2], p[3], variant == "Lbar" ? LKind::Lbar : LKind::L);
    }
    if (family == "hexagon") {
        require_count(p, 3, family);
        return hexagon_dual(p[0], p[1], p[2]);
    }
    if (family == "half_hexagon") {
        require_count(p, 3, family);
        return half_honeycomb(p[0], p[1], p[2]);
    }
    if (family == "gamma") {
        require_count(p, 5, family);
        return gamma(p[0], p[1], p[2], p[3], p[4]);
    }
    if (family == "grid") {
        require_count(p, 2, family);
        return grid_graph(p[0], p[1]);
    }
    throw InvalidParams("unknown family " + family);
}

/// Closed form for a region, when one applies to its kind.
Integer region_formula(const Region& r) {
    auto st = region_stats(r);
    switch (r.params.kind) {
        case RegionKind::symmetric: return count_symmetric(st, r.params.a).value;
        case RegionKind::douglas: return count_douglas(st, r.params.a).value;
        case RegionKind::asymmetric:
            return count_asym_general(st, r.params.a, static_cast<int>(r.params.c.size())).value;
    }
    return 0;
}

// ---- verify ----

struct Record {
    std::string family;
    std::string params;
    std::string formula;
    std::string oracle;
    std::string status;  // match, mismatch, skipped
    double ms = 0;
};

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string region_label(const RegionParams& p) {
    std::string s = "a=" + std::to_string(p.a) + " d=" + join(p.d);
    if (!p.c.empty()) s += " c=" + join(p.c);
    if (!p.dprime.empty()) s += " dp=" + join(p.dprime);
    return s;
}

class Sweep {
public:
    explicit Sweep(std::size_t cap) : cap_(cap) {}

    void add(const std::string& family, const std::string& params, const std::function<Integer()>& formula,
             const std::function<MatchGraph()>& graph) {
        Record rec{family, params, "", "", "", 0};
        auto t0 = std::chrono::steady_clock::now();
        MatchGraph g = graph();
        Integer f = formula();
        rec.formula = to_string(f);
        if (g.num_vertices() > cap_) {
            rec.status = "skipped";
        } else {
            Rational o = count_matchings_oracle(g, cap_);
            rec.oracle = to_string(o);
            rec.status = o == Rational(f) ? "match" : "mismatch";
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        records_.push_back(std::move(rec));
    }

    std::vector<Record>& records() { return records_; }

private:
    std::size_t cap_;
    std::vector<Record> records_;
};

std::optional<Region> try_region(const RegionParams& p) {
    try {
        return build_region(p);
    } catch (const BoundaryIntersection&) {
        return std::nullopt;
    }
}

std::vector<std::vector<int>> sequences(int max_sum, int max_len, bool odd_only) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = 1; x <= left; ++x) {
            if (odd_only && x % 2 == 0) continue;
            cur.push_back(x);
            rec(left - x);
            cur.pop_back();
        }
    };
    rec(max_sum);
    return out;
}

void sweep_regions(Sweep& s, const std::string& family, RegionKind kind, int max_a, int max_sum, int max_len,
                   bool odd_only) {
    auto seqs = sequences(max_sum, max_len, odd_only);
    std::vector<std::vector<int>> none{{}};
    const auto& mids = kind == RegionKind::asymmetric ? seqs : none;
    const auto& lows = kind == RegionKind::douglas ? none : seqs;
    for (int a = 1; a <= max_a; ++a)
        for (auto& d : seqs)
            for (auto& c : mids)
                for (auto& dp : lows) {
                    RegionParams p{kind, a, d, c, dp};
                    auto r = try_region(p);
                    if (!r) continue;
                    if (family == "odd_symmetric") {
                        s.add(family, region_label(p), [&] { return count_odd_symmetric(a, d, dp).value; },
                              [&] { return dual_graph(*r); });
                    } else if (family == "asym_odd") {
                        s.add(family, region_label(p), [&] { return count_asym_odd(a, d, c, dp).value; },
                              [&] { return dual_graph(*r); });
                    } else {
                        s.add(family, region_label(p), [&] { return region_formula(*r); }, [&] { return dual_graph(*r); });
                    }
                }
}

void run_sweep(Sweep& s, const std::string& suite, unsigned seed) {
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    if (want("classical")) {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c)
                    s.add("macmahon", join({a, b, c}), [=] { return macmahon(a, b, c); }, [=] { return hexagon_dual(a, b, c); });
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                s.add("kasteleyn", join({m, n}), [=] { return kasteleyn_rectangle(m, n); },
                      [=] { return grid_graph(2 * m, 2 * n); });
        for (int n = 1; n <= 4; ++n)
            s.add("aztec_diamond", std::to_string(n), [=] { return aztec_diamond(n); }, [=] { return aztec_rectangle(n, n); });
    }
    if (want("symmetric")) sweep_regions(s, "symmetric", RegionKind::symmetric, 3, 5, 3, false);
    if (want("symmetric")) sweep_regions(s, "odd_symmetric", RegionKind::symmetric, 3, 5, 3, true);
    if (want("douglas")) sweep_regions(s, "douglas", RegionKind::douglas, 5, 8, 4, false);
    if (want("asymmetric")) sweep_regions(s, "asymmetric", RegionKind::asymmetric, 3, 4, 2, false);
    if (want("asymmetric")) sweep_regions(s, "asym_odd", RegionKind::asymmetric, 3, 5, 2, true);
    if (want("gamma")) {
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= b; ++c)
                    for (int d = 1; d <= 3; ++d)
                        for (int e = 1; e <= c + d; ++e)
                            s.add("gamma", join({a, b, c, d, e}), [=] { return gamma_count(a, b, c, d, e); },
                                  [=] { return gamma(a, b, c, d, e); });
    }
    if (want("dents")) {
        for (int m = 1; m <= 3; ++m)
            for (int n = m - 1; n <= 3; ++n) {
                if (n < 1) continue;
                detail::for_each_subset(n + 1, m, [&](const std::vector<int>& t) {
                    s.add("aztec_dent", join({m, n}) + " t=" + join(t), [=] { return aztec_dent(m, n, t); },
                          [=] {
                              auto g = aztec_rectangle(m, n, ARVariant::baseless);
                              auto bottom = g.boundary("bottom");
                              for (int x : t) g.remove_vertex(bottom[static_cast<std::size_t>(x - 1)]);
                              return g;
                          });
                });
            }
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                detail::for_each_subset(a + b, a, [&](const std::vector<int>& r) {
                    s.add("half_hexagon_dent", join({a, b}) + " r=" + join(r),
                          [=] { return v_product(a, b, r).get_num(); },
                          [=] {
                              auto g = half_honeycomb(b, a, a);
                              auto top = g.boundary("top");
                              for (int x : r) g.remove_vertex(top[static_cast<std::size_t>(x - 1)]);
                              return g;
                          });
                });
    }
    if (want("random")) {
        std::mt19937 rng(seed);
        static const Rational weights[] = {1, Rational(1, 2), 2, 3};
        for (int i = 0; i < 100; ++i) {
            int n = 2 + static_cast<int>(rng() % 15);
            MatchGraph g;
            for (int v = 0; v < n; ++v) g.add_vertex(v);
            std::bernoulli_distribution coin(0.35);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) g.add_edge(u, v, weights[rng() % 4]);
            // the counter stands in for a formula here; weights may make the count fractional
            Rational c = count_matchings(g);
            Record rec{"random_graph", "seed=" + std::to_string(seed) + " #" + std::to_string(i), to_string(c), "", "", 0};
            Rational o = count_matchings_oracle(g);
            rec.oracle = to_string(o);
            rec.status = o == c ? "match" : "mismatch";
            s.records().push_back(rec);
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of hybrid domino-lozenge tilings"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--out", common.out, "write output to this file");
    app.add_option("--format", common.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-oracle-vertices", common.max_oracle, "oracle vertex bound");
    app.add_option("--seed", common.seed, "seed for randomized sweeps");
    app.fallthrough();

    RegionFlags rf;

    auto* region = app.add_subcommand("region", "build a region or print its statistics");
    region->require_subcommand(1);
    auto* region_build = region->add_subcommand("build", "region as JSON");
    auto* region_stats_cmd = region->add_subcommand("stats", "derived statistics");
    rf.add(region_build);
    rf.add(region_stats_cmd);

    auto* families = app.add_subcommand("families", "graph families");
    families->require_subcommand(1);
    auto* families_build = families->add_subcommand("build", "family graph as JSON");
    std::string family, family_params, variant;
    families_build->add_option("--family", family, "aztec_rectangle, aztec_diamond, side_trimmed, l_shaped, hexagon, half_hexagon, gamma, grid")
        ->required();
    families_build->add_option("--params", family_params, "comma-separated integers")->required();
    families_build->add_option("--variant", variant, "plain/baseless/combed/combed_baseless, LR/RR/TLR, L/Lbar");

    auto* count = app.add_subcommand("count", "count perfect matchings of a region or graph dual");
    std::string method = "auto", graph_file, count_family, count_params, count_variant;
    rf.add(count);
    count->add_option("--method", method, "auto, oracle, counter or formula")
        ->check(CLI::IsMember({"auto", "oracle", "counter", "formula"}));
    count->add_option("--graph", graph_file, "graph JSON file instead of a region");
    count->add_option("--family", count_family, "count a family graph instead of a region");
    count->add_option("--params", count_params, "family parameters");
    count->add_option("--variant", count_variant, "family variant");

    auto* formula = app.add_subcommand("formula", "closed-form evaluators");
    formula->require_subcommand(1);
    auto* formula_eval = formula->add_subcommand("eval", "evaluate one formula");
    std::string fname, fargs;
    bool fjson = false;
    formula_eval->add_option("--name", fname,
                             "macmahon, kasteleyn, aztec_diamond, v_product, aztec_dent, gamma, odd_symmetric, asym_odd")
        ->required();
    formula_eval->add_option("--args", fargs, "comma-separated integers");
    formula_eval->add_flag("--json", fjson, "print JSON");
    rf.add(formula_eval);

    auto* transform = app.add_subcommand("transform", "rewrite pipelines");
    transform->require_subcommand(1);
    auto* replay = transform->add_subcommand("replay", "replay a reduction and report its multipliers");
    std::string pipeline = "thm21", trace_file;
    bool with_graphs = false;
    rf.add(replay);
    replay->add_option("--pipeline", pipeline, "thm21, thm23 or thm61")->check(CLI::IsMember({"thm21", "thm23", "thm61"}));
    replay->add_option("--trace", trace_file, "write the full trace as JSON");
    replay->add_flag("--graphs", with_graphs, "include before/after graphs in the trace");

    auto* verify = app.add_subcommand("verify", "sweep formulas against the oracle");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all, classical, symmetric, douglas, asymmetric, gamma, dents, random")
        ->check(CLI::IsMember({"all", "classical", "symmetric", "douglas", "asymmetric", "gamma", "dents", "random"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::invalid;
    }

    try {
        if (*region_build) {
            emit(common, region_to_json(rf.build()).dump(2));
        } else if (*region_stats_cmd) {
            Region r = rf.build();
            Json j = stats_json(r);
            if (common.format == "json") {
                emit(common, j.dump(2));
            } else {
                std::ostringstream s;
                for (auto& [k, v] : j.items()) s << k << ": " << v.dump() << "\n";
                emit(common, s.str());
            }
        } else if (*families_build) {
            emit(common, graph_to_json(build_family(family, split_ints(family_params), variant)).dump(2));
        } else if (*count) {
            std::optional<Region> r;
            MatchGraph g;
            if (!graph_file.empty()) {
                g = graph_from_json(RegionFlags::read_json(graph_file));
            } else if (!count_family.empty()) {
                g = build_family(count_family, split_ints(count_params), count_variant);
            } else {
                if (!rf.given()) throw InvalidParams("count needs --region, --d, --graph or --family");
                r = rf.build();
                g = dual_graph(*r);
            }
            std::string m = method;
            if (m == "auto") m = r ? "formula" : "counter";
            std::string value;
            if (m == "formula") {
                if (!r) throw InvalidParams("formula counting needs a region");
                value = to_string(region_formula(*r));
            } else if (m == "oracle") {
                value = to_string(count_matchings_oracle(g, common.max_oracle));
            } else {
                value = to_string(count_matchings(g));
            }
            if (common.format == "json")
                emit(common, Json{{"method", m}, {"value", value}, {"vertices", g.num_vertices()}}.dump(2));
            else
                emit(common, value);
        } else if (*formula_eval) {
            auto xs = split_ints(fargs);
            Json j{{"name", fname}, {"args", xs}};
            std::string value;
            if (fname == "macmahon") {
                require_count(xs, 3, fname);
                value = to_string(macmahon(xs[0], xs[1], xs[2]));
            } else if (fname == "kasteleyn") {
                require_count(xs, 2, fname);
                value = to_string(kasteleyn_rectangle(xs[0], xs[1]));
            } else if (fname == "aztec_diamond") {
                require_count(xs, 1, fname);
                value = to_string(aztec_diamond(xs[0]));
            } else if (fname == "v_product") {
                int a = arg(xs, 0, fname), b = arg(xs, 1, fname);
                value = to_string(v_product(a, b, std::vector<int>(xs.begin() + 2, xs.end())));
            } else if (fname == "aztec_dent") {
                int m = arg(xs, 0, fname), n = arg(xs, 1, fname);
                value = to_string(aztec_dent(m, n, std::vector<int>(xs.begin() + 2, xs.end())));
            } else if (fname == "gamma") {
                require_count(xs, 5, fname);
                value = to_string(gamma_count(xs[0], xs[1], xs[2], xs[3], xs[4]));
            } else if (fname == "odd_symmetric" || fname == "asym_odd") {
                auto f = fname == "odd_symmetric" ? count_odd_symmetric(rf.a, rf.d, rf.dp)
                                                  : count_asym_odd(rf.a, rf.d, rf.c, rf.dp);
                value = to_string(f.value);
                if (f.exponent) j["exponent"] = *f.exponent;
                j["args"] = {{"a", rf.a}, {"d", rf.d}, {"c", rf.c}, {"dp", rf.dp}};
            } else {
                throw InvalidParams("unknown formula " + fname);
            }
            j["value"] = value;
            emit(common, fjson || common.format == "json" ? j.dump(2) : value);
        } else if (*replay) {
            Region r = rf.build();
            TransformTrace t;
            if (pipeline == "thm23") {
                t = replay_douglas(r);
            } else {
                if (pipeline == "thm21" && r.params.kind != RegionKind::symmetric)
                    throw InvalidParams("thm21 replays symmetric quasi-hexagons");
                if (pipeline == "thm61" && r.params.kind != RegionKind::asymmetric)
                    throw InvalidParams("thm61 replays asymmetric quasi-hexagons");
                t = replay_quasi_hexagon(r);
            }
            bool good = true;
            std::ostringstream s;
            Rational running = 1;
            for (std::size_t i = 0; i < t.steps.size(); ++i) {
                const auto& st = t.steps[i];
                running *= st.mu;
                std::string check = "unchecked";
                std::size_t n = std::max(st.before.num_vertices(), st.after.num_vertices());
                if (n <= common.max_oracle) {
                    bool same = count_matchings_oracle(st.before, common.max_oracle) ==
                                st.mu * count_matchings_oracle(st.after, common.max_oracle);
                    good = good && same;
                    check = same ? "oracle ok" : "ORACLE MISMATCH";
                }
                s << i + 1 << " " << st.name << " mu=" << to_string(st.mu) << " cumulative=" << to_string(running)
                  << " vertices " << st.before.num_vertices() << "->" << st.after.num_vertices() << " [" << check
                  << "]\n";
            }
            Rational total = count_matchings(dual_graph(r)), rest = count_matchings(t.result);
            bool identity = total == t.mu * rest;
            good = good && identity;
            s << "steps: " << t.steps.size() << "\nmu: " << to_string(t.mu);
            if (auto e = t.exponent()) s << " = 2^" << *e;
            s << "\nterminal:";
            for (auto& a : t.terminal) s << " " << to_string(a);
            s << "\nM(region) = " << to_string(total) << " = mu * " << to_string(rest)
              << (identity ? "" : "  MISMATCH") << "\n";
            Json j = trace_to_json(t, with_graphs);
            j["count"] = to_string(total);
            j["result_count"] = to_string(rest);
            j["pipeline"] = pipeline;
            if (!trace_file.empty()) {
                std::ofstream f(trace_file);
                if (!f) throw InvalidParams("cannot write " + trace_file);
                f << j.dump(2) << "\n";
            }
            emit(common, common.format == "json" ? j.dump(2) : s.str());
            if (!good) return Exit::mismatch;
        } else if (*verify) {
            Sweep sweep(common.max_oracle);
            run_sweep(sweep, suite, common.seed);
            auto& recs = sweep.records();
            std::sort(recs.begin(), recs.end(), [](const Record& x, const Record& y) {
                return std::tie(x.family, x.params) < std::tie(y.family, y.params);
            });
            std::map<std::string, int> tally;
            for (auto& rec : recs) tally[rec.status]++;
            std::ostringstream s;
            if (common.format == "json") {
                Json rows = Json::array();
                for (auto& rec : recs)
                    rows.push_back({{"family", rec.family},
                                    {"params", rec.params},
                                    {"formula", rec.formula},
                                    {"oracle", rec.oracle},
                                    {"match", rec.status == "match"},
                                    {"status", rec.status},
                                    {"runtime_ms", rec.ms}});
                s << Json{{"cases", rows}, {"summary", tally}}.dump(2);
            } else {
                s << "family,params,formula,oracle,match,status,runtime_ms\n";
                for (auto& rec : recs)
                    s << rec.family << "," << csv_field(rec.params) << "," << rec.formula << "," << rec.oracle << ","
                      << (rec.status == "match" ? "true" : "false") << "," << rec.status << "," << rec.ms << "\n";
            }
            emit(common, s.str());
            std::cerr << "cases: " << recs.size() << " match: " << tally["match"] << " mismatch: " << tally["mismatch"]
                      << " skipped: " << tally["skipped"] << "\n";
            if (tally["mismatch"]) return Exit::mismatch;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return Exit::resource;
    } catch (const PrecisionLoss& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return Exit::resource;
    } catch (const PatternMismatch& e) {
        std::cerr << "pattern mismatch: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const Error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return Exit::invalid;
    }
    return Exit::ok;
}
