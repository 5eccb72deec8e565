#include "deltacolor/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "deltacolor/mathutil.hpp"
#include "deltacolor/rng.hpp"
#include "deltacolor/symmetry.hpp"

namespace deltacolor {

TNodeOutcome t_node_sampling(const Graph& g, std::span<const Vertex> participants, int b,
                             int p_exp, std::uint64_t seed, PartialColoring& coloring,
                             RoundLedger& ledger) {
    if (b < 1) throw std::invalid_argument("t_node_sampling: b must be >= 1");
    TNodeOutcome out;
    out.conflict_distance = b;
    out.p_exponent = p_exp;

    const double p = std::pow(double(g.max_degree()), -double(p_exp));
    const std::uint64_t tag = rng::hash_tag("tnode_select");

    std::vector<Vertex> selected;
    for (Vertex v : participants)
        if (rng::bernoulli(seed, tag, 0, g.id(v), p)) selected.push_back(v);

    // symmetric unselection: any other selected vertex within distance b
    std::vector<char> is_selected(g.size(), 0);
    for (Vertex v : selected) is_selected[v] = 1;
    std::vector<Vertex> survivors;
    for (Vertex v : selected) {
        auto dist = bfs_distances(g, std::span<const Vertex>(&v, 1), b);
        bool conflict = false;
        for (Vertex u = 0; u < g.size() && !conflict; ++u)
            if (u != v && is_selected[u] && dist[u] <= b) conflict = true;
        if (!conflict) survivors.push_back(v);
    }

    const std::uint64_t pair_tag = rng::hash_tag("tnode_pair");
    for (Vertex v : survivors) {
        auto nb = g.neighbors(v);
        std::vector<std::pair<Vertex, Vertex>> options;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) options.emplace_back(nb[i], nb[j]);
        if (options.empty()) continue;  // clique neighborhood: renounce
        auto pick = options[rng::below(seed, pair_tag, 0, g.id(v), options.size())];
        out.t_nodes.push_back(v);
        out.marked[v] = pick;
        coloring.col[pick.first] = 1;
        coloring.col[pick.second] = 1;
    }
    std::sort(out.t_nodes.begin(), out.t_nodes.end());
    charge_ball(ledger, "tnode_sampling", b + 2);
    return out;
}

UncoloredLayers uncolored_distance_layers(const Graph& g, std::span<const Vertex> s,
                                          const PartialColoring& coloring) {
    if (s.empty()) throw std::invalid_argument("uncolored_distance_layers: empty S");
    UncoloredLayers out;
    out.part.layer.assign(g.size(), -1);

    std::vector<int> dist(g.size(), kInfDist);
    std::deque<Vertex> q;
    for (Vertex v : s)
        if (!coloring.colored(v) && dist[v] == kInfDist) {
            dist[v] = 0;
            q.push_back(v);
        }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex u : g.neighbors(v))
            if (!coloring.colored(u) && dist[u] == kInfDist) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (coloring.colored(v)) continue;
        if (dist[v] == kInfDist) {
            out.unreachable.push_back(v);
            continue;
        }
        out.part.layer[v] = dist[v];
        out.part.height = std::max(out.part.height, dist[v]);
    }
    return out;
}

namespace {

struct AttemptFailure {
    std::string reason;
};

RandResult run_attempt(const Graph& g, std::uint64_t attempt_seed, const RandConfig& config,
                       RoundLedger& ledger, RandStats& stats) {
    const int delta = g.max_degree();
    const std::size_t n = g.size();
    const int b = config.paper_constants ? 34 : config.b;
    const int p_exp = config.paper_constants ? 34 : config.p_exp;

    long d = config.d_override > 0
                 ? config.d_override
                 : static_cast<long>(std::ceil(20.0 * std::log(std::log2(double(std::max<std::size_t>(n, 4)))) /
                                                   std::log(double(delta)) +
                                               80.0));
    stats.d = d;

    RandResult res;
    res.coloring = PartialColoring(n);

    // Step 1: components of size at most 5d, discovered within radius 5d.
    const long size_cap = 5 * d;
    NldecFinder finder(g, static_cast<int>(std::min<long>(size_cap, static_cast<long>(n))));
    charge_ball(ledger, "alg8.step1", size_cap);
    std::vector<const NLdec*> family;
    for (const auto& cand : finder.candidates())
        if (static_cast<long>(cand.sub.verts.size()) <= size_cap) family.push_back(&cand);
    if (family.empty()) {
        res.failure_reason = "no extendable components of size <= 5d";
        return res;
    }
    stats.family_size = family.size();

    // Step 2: ruling family with the sampled ruling set inside RulingOrchids.
    RulingParams params{size_cap, 4, 1, true, attempt_seed};
    std::vector<FamilyMember> members;
    for (const NLdec* c : family)
        members.push_back(make_member(g, c->sub.verts, c->stem, c->root, params));
    FamilyState fam(g, std::move(members), params);
    auto outcome = ruling_subgraphs(fam, ledger);
    stats.survivor_count = outcome.survivors.size();

    // Step 3: vertices far from every component participate in sampling.
    std::vector<Vertex> family_verts;
    for (const NLdec* c : family)
        family_verts.insert(family_verts.end(), c->sub.verts.begin(), c->sub.verts.end());
    std::sort(family_verts.begin(), family_verts.end());
    family_verts.erase(std::unique(family_verts.begin(), family_verts.end()), family_verts.end());
    auto fam_dist = bfs_distances(g, family_verts);
    std::vector<Vertex> participants;
    for (Vertex v = 0; v < n; ++v)
        if (fam_dist[v] >= size_cap) participants.push_back(v);
    stats.participant_count = participants.size();

    auto tn = t_node_sampling(g, participants, b, p_exp, attempt_seed, res.coloring, ledger);
    stats.t_node_count = tn.t_nodes.size();

    // Step 4-5: layers by uncolored distance to S = survivors' vertices + T-nodes.
    std::vector<Vertex> s_set;
    for (std::size_t i : outcome.survivors)
        s_set.insert(s_set.end(), fam.members()[i].sub.verts.begin(),
                     fam.members()[i].sub.verts.end());
    s_set.insert(s_set.end(), tn.t_nodes.begin(), tn.t_nodes.end());
    std::sort(s_set.begin(), s_set.end());
    s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
    if (s_set.empty()) {
        res.failure_reason = "empty layering target set";
        return res;
    }
    auto layers = uncolored_distance_layers(g, s_set, res.coloring);
    if (!layers.unreachable.empty()) {
        res.failure_reason = "marked vertices cut off " +
                             std::to_string(layers.unreachable.size()) + " vertices";
        return res;
    }
    stats.h_layers = layers.part.height;
    charge_ball(ledger, "alg8.layers", layers.part.height);

    // Step 6: color layers > 0 in decreasing order (layer 0 = S, deferred).
    auto classes = linial_coloring(g, ledger, "alg8.linial");
    LayeredPartition outside = layers.part;
    for (Vertex v : s_set) outside.layer[v] = -1;
    std::vector<std::vector<int>> lists(n);
    for (Vertex v = 0; v < n; ++v)
        if (outside.layer[v] >= 0)
            for (int c = 1; c <= delta; ++c) lists[v].push_back(c);
    color_layered(g, outside, lists, res.coloring, classes, ledger, "alg8.step6");

    // Step 7a: T-nodes self-color; two neighbors share color 1, so a color is free.
    for (Vertex v : tn.t_nodes) {
        std::set<int> taken;
        int ones = 0;
        for (Vertex u : g.neighbors(v)) {
            if (!res.coloring.colored(u))
                throw std::logic_error("t-node neighbor left uncolored");
            taken.insert(res.coloring.col[u]);
            if (res.coloring.col[u] == 1) ++ones;
        }
        if (g.degree(v) == delta && ones < 2)
            throw std::logic_error("t-node lost its marked pair");
        int chosen = 0;
        for (int c = 1; c <= delta; ++c)
            if (!taken.count(c)) { chosen = c; break; }
        if (chosen == 0) throw std::logic_error("t-node has no free color");
        res.coloring.col[v] = chosen;
    }
    charge_ball(ledger, "alg8.tnode_color", 1);

    // Step 7b: family completion.
    std::vector<NLdec> survivors;
    for (std::size_t i : outcome.survivors)
        survivors.push_back(make_nldec_from_vertices(g, fam.members()[i].sub.verts));
    color_family(g, survivors, res.coloring, classes, ledger, "alg8.family");

    for (Vertex v = 0; v < n; ++v) {
        if (!res.coloring.colored(v)) throw std::logic_error("randomized: vertex left uncolored");
        for (Vertex u : g.neighbors(v))
            if (res.coloring.col[u] == res.coloring.col[v])
                throw std::logic_error("randomized: improper output");
        if (res.coloring.col[v] > delta) throw std::logic_error("randomized: color exceeds Delta");
    }
    res.success = true;
    return res;
}

}  // namespace

RandResult delta_color_randomized(const Graph& g, std::uint64_t seed, const RandConfig& config,
                                  RoundLedger& ledger) {
    require_brooks_preconditions(g);
    RandStats stats;
    stats.n = g.size();
    stats.delta = g.max_degree();

    RandResult last;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
        stats.retries_used = attempt;
        std::uint64_t attempt_seed = rng::derive(seed, rng::hash_tag("attempt"), attempt, 0);
        last = run_attempt(g, attempt_seed, config, ledger, stats);
        if (last.success) break;
    }
    last.stats = stats;
    if (!last.success && last.failure_reason.empty())
        last.failure_reason = "retries exhausted";
    return last;
}

}  // namespace deltacolor
