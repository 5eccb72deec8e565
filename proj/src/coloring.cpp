#include "deltacolor/coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "deltacolor/mathutil.hpp"

namespace deltacolor {

LayeredPartition layer_by_distance(const Graph& g, std::span<const Vertex> targets) {
    if (targets.empty()) throw std::invalid_argument("layer_by_distance: empty target set");
    auto dist = bfs_distances(g, targets);
    LayeredPartition part;
    part.layer.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        if (dist[v] == kInfDist)
            throw std::invalid_argument("layer_by_distance: vertex " + std::to_string(g.id(v)) +
                                        " unreachable from targets");
        part.layer[v] = dist[v];
        part.height = std::max(part.height, dist[v]);
    }
    return part;
}

void color_layered(const Graph& g, const LayeredPartition& part,
                   const std::vector<std::vector<int>>& lists, PartialColoring& coloring,
                   const VertexColoring& classes, RoundLedger& ledger, const std::string& phase) {
    std::vector<std::vector<Vertex>> by_layer(part.height + 1);
    for (Vertex v = 0; v < g.size(); ++v)
        if (part.layer[v] >= 0 && !coloring.colored(v)) by_layer[part.layer[v]].push_back(v);

    long layers_processed = 0;
    for (int l = part.height; l >= 0; --l) {
        if (by_layer[l].empty()) continue;
        ++layers_processed;
        // ascending Linial color class, then vertex id
        std::vector<Vertex> order = by_layer[l];
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (classes.color[a] != classes.color[b]) return classes.color[a] < classes.color[b];
            return g.id(a) < g.id(b);
        });
        for (Vertex v : order) {
            std::set<int> taken;
            for (Vertex u : g.neighbors(v))
                if (coloring.colored(u)) taken.insert(coloring.col[u]);
            int chosen = 0;
            for (int c : lists[v])
                if (!taken.count(c)) { chosen = c; break; }
            if (chosen == 0)
                throw std::runtime_error("color_layered: list deficit at vertex " +
                                         std::to_string(g.id(v)));
            coloring.col[v] = chosen;
        }
    }
    ledger.add_superstep(phase, layers_processed * (classes.palette_size + 1));
}

namespace {

bool vertex_is_flexible(const Graph& g, Vertex v, const PartialColoring& coloring) {
    if (g.degree(v) < g.max_degree()) return true;
    std::set<int> seen;
    for (Vertex u : g.neighbors(v)) {
        if (!coloring.colored(u)) continue;
        if (!seen.insert(coloring.col[u]).second) return true;  // repeated color
    }
    return false;
}

}  // namespace

FlexibleOutcome create_flexible_node(const Graph& g, const NLdec& comp, PartialColoring& coloring) {
    if (comp.kind == NLdec::Kind::low_degree_node) return {comp.root, false};

    for (Vertex v : comp.stem)
        if (!coloring.colored(v) && vertex_is_flexible(g, v, coloring)) return {v, false};

    // Color the root with a color seen around a degree-2 stem neighbor but not
    // around the root, making that neighbor flexible.
    InducedView view(g, comp.sub.verts);
    Vertex pick = kNoVertex;
    for (Vertex v : comp.stem) {
        if (v == comp.root) continue;
        if (view.degree(view.local(v)) == 2 && !coloring.colored(v) &&
            (pick == kNoVertex || g.id(v) < g.id(pick)))
            pick = v;
    }
    if (pick == kNoVertex)
        throw std::runtime_error("create_flexible_node: no degree-2 stem neighbor");

    std::set<int> around_root;
    for (Vertex u : g.neighbors(comp.root))
        if (coloring.colored(u)) around_root.insert(coloring.col[u]);
    int chosen = 0;
    std::set<int> around_pick;
    for (Vertex u : g.neighbors(pick))
        if (coloring.colored(u)) around_pick.insert(coloring.col[u]);
    for (int c : around_pick)
        if (!around_root.count(c)) { chosen = c; break; }
    if (chosen == 0)
        throw std::runtime_error("create_flexible_node: no transferable color at vertex " +
                                 std::to_string(g.id(comp.root)));
    coloring.col[comp.root] = chosen;
    return {pick, true};
}

void color_family(const Graph& g, const std::vector<NLdec>& members, PartialColoring& coloring,
                  const VertexColoring& classes, RoundLedger& ledger, const std::string& phase) {
    if (members.empty()) return;
    std::vector<Vertex> flexibles;
    for (const auto& m : members) {
        auto out = create_flexible_node(g, m, coloring);
        flexibles.push_back(out.flexible);
    }
    charge_ball(ledger, phase + ".flexible", 2);

    // BFS inside the graph induced by uncolored member vertices
    std::vector<char> uncolored_member(g.size(), 0);
    for (const auto& m : members)
        for (Vertex v : m.sub.verts)
            if (!coloring.colored(v)) uncolored_member[v] = 1;

    std::vector<int> dist(g.size(), kInfDist);
    std::deque<Vertex> q;
    for (Vertex f : flexibles)
        if (uncolored_member[f] && dist[f] == kInfDist) {
            dist[f] = 0;
            q.push_back(f);
        }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex u : g.neighbors(v))
            if (uncolored_member[u] && dist[u] == kInfDist) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }

    LayeredPartition part;
    part.layer.assign(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!uncolored_member[v]) continue;
        if (dist[v] == kInfDist)
            throw std::runtime_error("color_family: member vertex cut off from flexible nodes");
        part.layer[v] = dist[v];
        part.height = std::max(part.height, dist[v]);
    }
    charge_ball(ledger, phase + ".layers", part.height);

    std::vector<std::vector<int>> lists(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        if (part.layer[v] >= 0)
            for (int c = 1; c <= g.max_degree(); ++c) lists[v].push_back(c);
    color_layered(g, part, lists, coloring, classes, ledger, phase + ".color");
}

void require_brooks_preconditions(const Graph& g) {
    if (g.max_degree() < 3)
        throw BrooksViolation("Brooks precondition: max degree must be >= 3 (got " +
                              std::to_string(g.max_degree()) + ")");
    int delta = g.max_degree();
    for (const auto& comp : connected_components(g)) {
        if (comp.size() != static_cast<std::size_t>(delta) + 1) continue;
        bool complete = true;
        for (Vertex v : comp)
            if (g.degree(v) != delta) { complete = false; break; }
        if (complete)
            throw BrooksViolation("Brooks precondition: component of vertex " +
                                  std::to_string(g.id(comp[0])) + " is a (Delta+1)-clique");
    }
}

DetResult delta_color_deterministic(const Graph& g, RoundLedger& ledger) {
    require_brooks_preconditions(g);
    const int delta = g.max_degree();
    const std::size_t n = g.size();

    DetResult res;
    res.coloring = PartialColoring(n);
    auto& stats = res.stats;
    stats.n = n;
    stats.delta = delta;

    // Step 1: every vertex selects the smallest component in its ball.
    long radius = std::max<long>(1, ceil_log(delta - 1, double(n)) * 2);
    stats.selection_radius = radius;
    NldecFinder finder(g, static_cast<int>(radius));
    auto winners = finder.select_all(static_cast<int>(radius));
    charge_ball(ledger, "alg7.step1", radius);

    long k = 8 * radius + 4;  // = 16*log_{Delta-1} n + 4
    stats.k = k;

    std::map<std::vector<Vertex>, std::size_t> dedupe;
    std::vector<const NLdec*> family;
    for (Vertex v = 0; v < n; ++v) {
        if (winners[v] == NldecFinder::kNoCandidate)
            throw std::runtime_error(
                "delta_color_deterministic: no extendable component within radius " +
                std::to_string(radius) + " of vertex " + std::to_string(g.id(v)));
        const NLdec& cand = finder.candidates()[winners[v]];
        if (static_cast<long>(cand.sub.verts.size()) > k) continue;  // oversized candidate
        if (dedupe.emplace(cand.sub.verts, family.size()).second) family.push_back(&cand);
    }
    if (family.empty())
        throw std::runtime_error("delta_color_deterministic: empty component family");
    stats.family_size = family.size();

    // Step 2: ruling subgraphs with natural orchids, d=1, t=4.
    RulingParams params{k, 4, 1, false, 0};
    std::vector<FamilyMember> members;
    members.reserve(family.size());
    for (const NLdec* c : family)
        members.push_back(make_member(g, c->sub.verts, c->stem, c->root, params));
    FamilyState fam(g, std::move(members), params);
    auto outcome = ruling_subgraphs(fam, ledger);
    stats.survivor_count = outcome.survivors.size();
    stats.coverage_radius = outcome.coverage_radius;
    stats.chain_bound = outcome.chain_bound;
    stats.snapshots = outcome.snapshots;

    // Step 3: layers by distance to the surviving family.
    std::vector<Vertex> targets;
    for (std::size_t i : outcome.survivors)
        targets.insert(targets.end(), fam.members()[i].sub.verts.begin(),
                       fam.members()[i].sub.verts.end());
    std::sort(targets.begin(), targets.end());
    auto part = layer_by_distance(g, targets);
    stats.h_layers = part.height;
    charge_ball(ledger, "alg7.step3", part.height);

    // Step 4: color everything outside the family, layers in decreasing order.
    auto classes = linial_coloring(g, ledger, "alg7.linial");
    LayeredPartition outside = part;
    for (Vertex v : targets) outside.layer[v] = -1;
    std::vector<std::vector<int>> lists(n);
    for (Vertex v = 0; v < n; ++v)
        if (outside.layer[v] >= 0)
            for (int c = 1; c <= delta; ++c) lists[v].push_back(c);
    color_layered(g, outside, lists, res.coloring, classes, ledger, "alg7.step4");

    // Steps 5-7: flexible nodes and family completion.
    std::vector<NLdec> survivors;
    for (std::size_t i : outcome.survivors)
        survivors.push_back(make_nldec_from_vertices(g, fam.members()[i].sub.verts));
    color_family(g, survivors, res.coloring, classes, ledger, "alg7.step57");

    for (Vertex v = 0; v < n; ++v) {
        if (!res.coloring.colored(v))
            throw std::logic_error("delta_color_deterministic: vertex left uncolored");
        for (Vertex u : g.neighbors(v))
            if (res.coloring.col[u] == res.coloring.col[v])
                throw std::logic_error("delta_color_deterministic: improper output");
        if (res.coloring.col[v] > delta)
            throw std::logic_error("delta_color_deterministic: color exceeds Delta");
    }
    return res;
}

}  // namespace deltacolor
