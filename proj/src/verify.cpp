#include "deltacolor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "deltacolor/mathutil.hpp"

namespace deltacolor {

VerificationReport verify_proper_coloring(const Graph& g, const PartialColoring& coloring,
                                          int palette_cap) {
    VerificationReport rep;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!coloring.colored(v)) {
            rep.add("total", false, "uncolored vertex " + std::to_string(g.id(v)));
            return rep;
        }
        if (coloring.col[v] > palette_cap) {
            rep.add("palette_cap", false,
                    "vertex " + std::to_string(g.id(v)) + " has color " +
                        std::to_string(coloring.col[v]) + " > " + std::to_string(palette_cap));
            return rep;
        }
    }
    rep.add("total", true);
    rep.add("palette_cap", true);
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex u : g.neighbors(v))
            if (u > v && coloring.col[u] == coloring.col[v]) {
                rep.add("proper", false,
                        "edge (" + std::to_string(g.id(v)) + "," + std::to_string(g.id(u)) +
                            ") monochromatic with color " + std::to_string(coloring.col[v]));
                return rep;
            }
    rep.add("proper", true);
    return rep;
}

VerificationReport verify_brooks_preconditions(const Graph& g) {
    VerificationReport rep;
    try {
        require_brooks_preconditions(g);
        rep.add("brooks_preconditions", true);
    } catch (const BrooksViolation& e) {
        rep.add("brooks_preconditions", false, e.what());
    }
    return rep;
}

VerificationReport verify_ruling_family(const FamilyState& st, const RulingOutcome& outcome) {
    VerificationReport rep;
    const Graph& g = st.graph();
    const auto& pr = st.params();

    auto cd = contention_digraph(st);
    rep.add("contention_empty", cd.edges().empty(),
            std::to_string(cd.edges().size()) + " contention edges remain");

    bool pair_ok = true;
    std::string pair_witness;
    const auto& surv = outcome.survivors;
    for (std::size_t a = 0; a < surv.size() && pair_ok; ++a)
        for (std::size_t b = 0; b < surv.size(); ++b) {
            if (a == b) continue;
            auto dd = set_distance(g, st.members()[surv[a]].sub.verts,
                                   st.members()[surv[b]].orchid.stem);
            if (dd && *dd < pr.d + 1) {
                pair_ok = false;
                pair_witness = "members " + std::to_string(surv[a]) + "," +
                               std::to_string(surv[b]) + " at stem distance " + std::to_string(*dd);
                break;
            }
        }
    rep.add("pairwise_stem_distance", pair_ok, pair_witness);

    bool cov_ok = outcome.survivors.empty() || outcome.coverage_radius <= outcome.chain_bound;
    rep.add("coverage_within_chain_bound", cov_ok,
            "coverage " + std::to_string(outcome.coverage_radius) + " > chain bound " +
                std::to_string(outcome.chain_bound));
    return rep;
}

VerificationReport verify_degree_bounds(const std::vector<StageSnapshot>& snapshots,
                                        const RulingParams& params, int host_delta) {
    VerificationReport rep;
    const double k = double(params.k), t = double(params.t), d = double(params.d);
    for (const auto& s : snapshots) {
        auto tagged = [&s](const std::string& what) {
            return s.stage + (s.iter > 0 ? "_" + std::to_string(s.iter) : "") + "." + what;
        };
        if (s.stage == "elimination_walk") {
            double bound = 2.0 * t * t * std::pow(double(host_delta), 3.0 * d);
            rep.add(tagged("conflict_degree"), s.conflict_max_degree <= bound,
                    std::to_string(s.conflict_max_degree) + " > " + std::to_string(bound));
            rep.add(tagged("elim_hop"), s.max_elim_hop <= 2 * params.t,
                    std::to_string(s.max_elim_hop) + " > 2t");
        } else if (s.stage == "ruling_orchids") {
            double bound = params.d > 0 ? 2.0 * k / d : k;
            rep.add(tagged("contention_outdeg"), s.contention_max_out <= bound,
                    std::to_string(s.contention_max_out) + " > " + std::to_string(bound));
            rep.add(tagged("orchid_separation"), s.post_conflict_edges == 0,
                    std::to_string(s.post_conflict_edges) + " conflict edges at distance d");
        } else if (s.stage == "directional_elimination_walk") {
            rep.add(tagged("contention_indeg"), s.contention_max_in <= 6.0 * k * t,
                    std::to_string(s.contention_max_in) + " > 6kt");
            rep.add(tagged("elim_hop"), s.max_elim_hop <= 6 * params.k,
                    std::to_string(s.max_elim_hop) + " > 6k");
        } else if (s.stage == "outdegree_reduction") {
            double li = iter_log(k, s.iter);
            rep.add(tagged("contention_outdeg"), s.contention_max_out <= li * li / 2.0,
                    std::to_string(s.contention_max_out) + " > (log^(i) k)^2/2");
        } else if (s.stage == "pausing_elimination_walk") {
            double li = iter_log(k, s.iter);
            rep.add(tagged("contention_outdeg"), s.contention_max_out <= li * li / 2.0,
                    std::to_string(s.contention_max_out) + " > (log^(i) k)^2/2");
            if (s.p > 0) {
                long per_branch = s.ell > 0 ? s.t_max_finish / s.ell + 1 : 1;
                long bound = s.p * per_branch;
                rep.add(tagged("contention_indeg_telemetry"), s.contention_max_in <= bound,
                        std::to_string(s.contention_max_in) + " > p*(T_max/ell+1) = " +
                            std::to_string(bound));
            }
            rep.add(tagged("token_budget"), s.t_max_finish <= s.token_budget,
                    std::to_string(s.t_max_finish) + " > " + std::to_string(s.token_budget));
        } else if (s.stage == "final_mis") {
            rep.add(tagged("contention_empty"),
                    s.contention_max_out <= 0 && s.contention_max_in <= 0,
                    "contention edges remain after final MIS");
        }
    }
    return rep;
}

// ---- Brute-force oracles ------------------------------------------------------

namespace {

bool color_backtrack(const Graph& g, std::vector<int>& col, const std::vector<Vertex>& order,
                     std::size_t idx, int palette) {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    for (int c = 1; c <= palette; ++c) {
        bool ok = true;
        for (Vertex u : g.neighbors(v))
            if (col[u] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (color_backtrack(g, col, order, idx + 1, palette)) return true;
        col[v] = 0;
    }
    return false;
}

bool list_color_backtrack(const InducedView& view, const std::vector<std::vector<int>>& lists,
                          std::vector<int>& col, std::uint32_t idx) {
    if (idx == view.size()) return true;
    for (int c : lists[idx]) {
        bool ok = true;
        for (auto u : view.neighbors(idx))
            if (col[u] == c) { ok = false; break; }
        if (!ok) continue;
        col[idx] = c;
        if (list_color_backtrack(view, lists, col, idx + 1)) return true;
        col[idx] = 0;
    }
    return false;
}

// all size-k subsets of {1..palette}
std::vector<std::vector<int>> subsets_of_size(int palette, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c <= palette; ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

bool exhaustive_delta_colorable(const Graph& g, std::size_t cap) {
    if (g.size() > cap)
        throw std::invalid_argument("exhaustive_delta_colorable: size cap exceeded");
    std::vector<Vertex> order(g.size());
    for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
    // color high-degree vertices first
    std::sort(order.begin(), order.end(),
              [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> col(g.size(), 0);
    return color_backtrack(g, col, order, 0, g.max_degree());
}

bool brute_force_list_choosable(const Graph& g, std::span<const Vertex> verts, int max_palette) {
    if (verts.size() > 6 || max_palette > 6)
        throw std::invalid_argument("brute_force_list_choosable: caps exceeded (|V|<=6, palette<=6)");
    InducedView view(g, verts);

    // candidate lists per vertex: all degree-sized subsets; the first vertex's
    // list is fixed to {1..deg} (color permutations act on all lists at once)
    std::vector<std::vector<std::vector<int>>> options(view.size());
    for (std::uint32_t v = 0; v < view.size(); ++v) {
        int deg = view.degree(v);
        if (deg == 0) return false;  // the empty list is a valid degree-sized assignment
        if (v == 0) {
            std::vector<int> first;
            for (int c = 1; c <= deg; ++c) first.push_back(c);
            options[v] = {first};
        } else {
            options[v] = subsets_of_size(max_palette, deg);
        }
    }

    std::vector<std::vector<int>> lists(view.size());
    std::function<bool(std::uint32_t)> assign = [&](std::uint32_t v) -> bool {
        if (v == view.size()) {
            std::vector<int> col(view.size(), 0);
            return list_color_backtrack(view, lists, col, 0);
        }
        for (const auto& cand : options[v]) {
            lists[v] = cand;
            if (!assign(v + 1)) return false;
        }
        return true;
    };
    return assign(0);
}

// ---- Enumeration ----------------------------------------------------------------

namespace {

bool graph_connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == n;
}

// Backtracking over the lexicographic pair order with degree-feasibility
// pruning. Emits every labeled graph satisfying the degree predicate.
void enumerate_degree_bounded(std::size_t n, int max_degree, bool exact,
                              std::vector<Graph>& out) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<Vertex, Vertex>> chosen;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == pairs.size()) {
            if (exact)
                for (Vertex v = 0; v < n; ++v)
                    if (deg[v] != max_degree) return;
            if (!graph_connected(n, chosen)) return;
            out.push_back(Graph::from_edges(n, chosen));
            return;
        }
        auto [a, b] = pairs[idx];
        // prune: can remaining pairs still raise every deficient vertex?
        if (exact) {
            for (Vertex v = 0; v < n; ++v) {
                if (deg[v] > max_degree) return;
                int remaining = 0;
                for (std::size_t j = idx; j < pairs.size(); ++j)
                    if (pairs[j].first == v || pairs[j].second == v) ++remaining;
                if (deg[v] + remaining < max_degree) return;
            }
        }
        // exclude
        rec(idx + 1);
        // include
        if (deg[a] < max_degree && deg[b] < max_degree) {
            ++deg[a];
            ++deg[b];
            chosen.push_back(pairs[idx]);
            rec(idx + 1);
            chosen.pop_back();
            --deg[a];
            --deg[b];
        }
    };
    rec(0);
}

}  // namespace

std::vector<Graph> enumerate_connected_regular(std::size_t n, int degree) {
    std::vector<Graph> out;
    if (n <= static_cast<std::size_t>(degree) || (n * degree) % 2 != 0) return out;
    enumerate_degree_bounded(n, degree, true, out);
    return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n, int max_degree) {
    std::vector<Graph> out;
    enumerate_degree_bounded(n, max_degree, false, out);
    return out;
}

}  // namespace deltacolor
