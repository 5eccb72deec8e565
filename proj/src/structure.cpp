#include "deltacolor/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace deltacolor {

// ---- Orchid -----------------------------------------------------------------

bool Orchid::halo_contains(Vertex v) const {
    return std::binary_search(halo.begin(), halo.end(), v);
}

Orchid make_orchid(const Graph& g, Vertex root, std::vector<Vertex> stem, int t, int d) {
    std::sort(stem.begin(), stem.end());
    stem.erase(std::unique(stem.begin(), stem.end()), stem.end());
    if (!std::binary_search(stem.begin(), stem.end(), root))
        throw std::invalid_argument("orchid: root must lie on the stem");
    if (static_cast<int>(stem.size()) > t)
        throw std::invalid_argument("orchid: stem exceeds budget t");
    Orchid o;
    o.root = root;
    o.halo = ball_of_set(g, stem, d);
    o.stem = std::move(stem);
    o.t = t;
    o.d = d;
    return o;
}

// ---- Predicates ---------------------------------------------------------------

bool is_dcc(const Graph& g, std::span<const Vertex> verts) {
    InducedView view(g, verts);
    if (!view.is_biconnected()) return false;
    if (is_clique(view)) return false;
    if (is_cycle(view) && view.size() % 2 == 1) return false;
    return true;
}

bool is_ldcc(const Graph& g, std::span<const Vertex> verts) {
    InducedView view(g, verts);
    if (!view.is_biconnected()) return false;
    if (is_clique(view)) return false;
    if (is_cycle(view)) return false;
    return true;
}

bool is_nice_ldcc(const Graph& g, std::span<const Vertex> verts) {
    InducedView view(g, verts);
    if (!view.is_biconnected()) return false;
    std::size_t deg3 = 0;
    for (std::uint32_t v = 0; v < view.size(); ++v) {
        int d = view.degree(v);
        if (d == 3)
            ++deg3;
        else if (d != 2)
            return false;
    }
    return deg3 == 2;
}

// ---- Minimum induced cycle ------------------------------------------------------

namespace {

struct CycleCandidate {
    int length = kInfDist;
    std::uint32_t root = 0, x = 0, y = 0;
    std::vector<int> dist;
    std::vector<std::uint32_t> parent;
};

// BFS from root; scans non-tree edges for the shortest closed walk through the
// root's BFS tree. Taking the minimum over all roots yields a shortest cycle.
template <typename NeighborsFn>
void scan_root(std::size_t n, NeighborsFn&& nbrs, std::uint32_t root, CycleCandidate& best) {
    std::vector<int> dist(n, kInfDist);
    std::vector<std::uint32_t> parent(n, root);
    std::deque<std::uint32_t> q{root};
    dist[root] = 0;
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        if (2 * dist[v] >= best.length) break;  // cannot improve further
        for (std::uint32_t u : nbrs(v)) {
            if (dist[u] == kInfDist) {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                q.push_back(u);
            } else if (u != parent[v] && v != parent[u]) {
                int len = dist[u] + dist[v] + 1;
                if (len < best.length) {
                    best = {len, root, v, u, dist, parent};
                }
            }
        }
    }
}

template <typename NeighborsFn>
std::vector<std::uint32_t> shortest_cycle(std::size_t n, NeighborsFn&& nbrs) {
    CycleCandidate best;
    for (std::uint32_t r = 0; r < n; ++r) scan_root(n, nbrs, r, best);
    if (best.length == kInfDist) return {};
    // Paths x->LCA and y->LCA in the BFS tree are simple and meet only at the
    // LCA, so the concatenation with edge (x,y) is a simple cycle.
    std::vector<std::uint32_t> px{best.x}, py{best.y};
    while (px.back() != best.root) px.push_back(best.parent[px.back()]);
    while (py.back() != best.root) py.push_back(best.parent[py.back()]);
    // trim to LCA
    std::vector<char> on_px(n, 0);
    for (auto v : px) on_px[v] = 1;
    std::size_t meet = 0;
    while (!on_px[py[meet]]) ++meet;
    std::uint32_t lca = py[meet];
    std::vector<std::uint32_t> cycle;
    for (auto v : px) {
        cycle.push_back(v);
        if (v == lca) break;
    }
    for (std::size_t i = meet; i-- > 0;) cycle.push_back(py[i]);
    return cycle;
}

// Shrinks a cycle along chords until chordless. Keeps the shorter side of
// every chord, so the length strictly decreases.
template <typename HasEdgeFn>
void make_chordless(std::vector<std::uint32_t>& cyc, HasEdgeFn&& has_edge) {
    bool changed = true;
    while (changed && cyc.size() > 3) {
        changed = false;
        std::size_t s = cyc.size();
        for (std::size_t i = 0; i < s && !changed; ++i)
            for (std::size_t j = i + 2; j < s && !changed; ++j) {
                if (i == 0 && j == s - 1) continue;  // cycle edge
                if (!has_edge(cyc[i], cyc[j])) continue;
                std::size_t inner = j - i + 1, outer = s - (j - i) + 1;
                std::vector<std::uint32_t> next;
                if (inner <= outer) {
                    next.assign(cyc.begin() + i, cyc.begin() + j + 1);
                } else {
                    next.assign(cyc.begin() + j, cyc.end());
                    next.insert(next.end(), cyc.begin(), cyc.begin() + i + 1);
                }
                cyc = std::move(next);
                changed = true;
            }
    }
}

}  // namespace

std::vector<Vertex> find_induced_cycle(const Graph& g, std::span<const Vertex> verts) {
    InducedView view(g, verts);
    auto cyc = shortest_cycle(view.size(), [&](std::uint32_t v) { return view.neighbors(v); });
    if (cyc.empty()) throw std::invalid_argument("find_induced_cycle: acyclic input");
    std::vector<Vertex> out;
    out.reserve(cyc.size());
    for (auto lv : cyc) out.push_back(view.global(lv));
    return out;
}

// ---- Theta growing ------------------------------------------------------------

namespace {

// Search domain: the host graph restricted by a membership predicate, with a
// BFS depth cap. Used both for extraction inside an LDCC and for pool growth
// across the whole graph.
struct Domain {
    const Graph& g;
    std::function<bool(Vertex)> allowed;
    int depth_cap;
};

// Shortest path src -> dst whose interior avoids `forbidden` and stays inside
// the domain. Returns the path including endpoints, or empty.
std::vector<Vertex> shortest_path_avoiding(const Domain& dom, Vertex src, Vertex dst,
                                           const std::vector<char>& forbidden) {
    const Graph& g = dom.g;
    std::vector<int> dist(g.size(), kInfDist);
    std::vector<Vertex> parent(g.size(), kNoVertex);
    std::deque<Vertex> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (v == dst) break;
        if (dist[v] >= dom.depth_cap) continue;
        for (Vertex u : g.neighbors(v)) {
            if (dist[u] != kInfDist) continue;
            if (u != dst && (forbidden[u] || !dom.allowed(u))) continue;
            dist[u] = dist[v] + 1;
            parent[u] = v;
            q.push_back(u);
        }
    }
    if (dist[dst] == kInfDist) return {};
    std::vector<Vertex> path{dst};
    while (path.back() != src) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Multi-source BFS from the cycle through external vertices. Every external
// x reached gets its distance to the cycle and the cycle vertex its shortest
// external path starts from.
struct EarLabels {
    std::vector<int> dist;      // kInfDist outside the searched region
    std::vector<Vertex> root;   // nearest cycle vertex
    std::vector<Vertex> parent;
};

EarLabels label_externals(const Domain& dom, const std::vector<Vertex>& cycle,
                          const std::vector<char>& on_cycle) {
    const Graph& g = dom.g;
    EarLabels lb{std::vector<int>(g.size(), kInfDist), std::vector<Vertex>(g.size(), kNoVertex),
                 std::vector<Vertex>(g.size(), kNoVertex)};
    std::deque<Vertex> q;
    for (Vertex c : cycle) {
        lb.dist[c] = 0;
        lb.root[c] = c;
        q.push_back(c);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (lb.dist[v] >= dom.depth_cap) continue;
        for (Vertex u : g.neighbors(v)) {
            if (on_cycle[u] || !dom.allowed(u)) continue;
            if (lb.dist[u] != kInfDist) continue;
            lb.dist[u] = lb.dist[v] + 1;
            lb.root[u] = lb.root[v];
            lb.parent[u] = v;
            q.push_back(u);
        }
    }
    return lb;
}

// Greedy maximal clique containing the given seed clique, by ascending ID.
std::vector<Vertex> grow_maximal_clique(const Domain& dom, std::vector<Vertex> clique) {
    const Graph& g = dom.g;
    bool grew = true;
    while (grew) {
        grew = false;
        Vertex best = kNoVertex;
        for (Vertex u : g.neighbors(clique.front())) {
            if (!dom.allowed(u)) continue;
            if (std::find(clique.begin(), clique.end(), u) != clique.end()) continue;
            bool adj_all = true;
            for (Vertex c : clique)
                if (u != c && !g.has_edge(u, c)) { adj_all = false; break; }
            if (adj_all && (best == kNoVertex || g.id(u) < g.id(best))) best = u;
        }
        if (best != kNoVertex) {
            clique.push_back(best);
            grew = true;
        }
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

// The triangle case: extend a maximal clique K (|K| >= 3) to a diamond or a
// triangle-plus-ear. Returns the vertex set or empty on failure.
std::vector<Vertex> grow_from_clique(const Domain& dom, const std::vector<Vertex>& triangle) {
    const Graph& g = dom.g;
    auto clique = grow_maximal_clique(dom, triangle);
    std::vector<char> in_k(g.size(), 0);
    for (Vertex v : clique) in_k[v] = 1;

    // externals adjacent to the clique, with their attachment sets
    std::vector<Vertex> externals;
    {
        std::set<Vertex> seen;
        for (Vertex c : clique)
            for (Vertex u : g.neighbors(c))
                if (!in_k[u] && dom.allowed(u) && seen.insert(u).second) externals.push_back(u);
        std::sort(externals.begin(), externals.end(),
                  [&](Vertex a, Vertex b) { return g.id(a) < g.id(b); });
    }

    // A doubly-attached external yields a diamond.
    for (Vertex v : externals) {
        std::vector<Vertex> att;
        for (Vertex c : clique)
            if (g.has_edge(v, c)) att.push_back(c);
        if (att.size() >= 2 && att.size() < clique.size()) {
            Vertex out = kNoVertex;
            for (Vertex c : clique)
                if (!g.has_edge(v, c)) { out = c; break; }
            return {v, att[0], att[1], out};
        }
    }

    // Unique attachments: minimal path between externals with distinct
    // attachment vertices, giving a triangle plus an ear.
    std::vector<Vertex> best_path;
    Vertex best_uv = kNoVertex, best_uv2 = kNoVertex;
    for (Vertex v : externals) {
        Vertex uv = kNoVertex;
        for (Vertex c : clique)
            if (g.has_edge(v, c)) { uv = c; break; }
        for (Vertex v2 : externals) {
            if (v2 == v) continue;
            Vertex uv2 = kNoVertex;
            for (Vertex c : clique)
                if (g.has_edge(v2, c)) { uv2 = c; break; }
            if (uv == uv2) continue;
            std::vector<char> forb(g.size(), 0);
            for (Vertex c : clique) forb[c] = 1;  // path must avoid the clique
            auto path = shortest_path_avoiding(dom, v, v2, forb);
            if (path.empty()) continue;
            if (best_path.empty() || path.size() < best_path.size()) {
                best_path = path;
                best_uv = uv;
                best_uv2 = uv2;
            }
        }
    }
    if (best_path.empty()) return {};
    Vertex third = kNoVertex;
    for (Vertex c : clique)
        if (c != best_uv && c != best_uv2) { third = c; break; }
    if (third == kNoVertex) return {};
    std::vector<Vertex> out{third, best_uv, best_uv2};
    out.insert(out.end(), best_path.begin(), best_path.end());
    return out;
}

// General case: cycle of length >= 4 plus a shortest ear with distinct
// attachment points. Length-minimality over the candidate set below makes the
// result chordless: a stray adjacency from an ear vertex into the cycle (or
// between the two BFS branches) would yield a strictly shorter candidate.
// Ties prefer ears close to the anchor, so per-vertex pools stay local.
std::vector<Vertex> grow_from_cycle(const Domain& dom, const std::vector<Vertex>& cycle,
                                    const std::vector<int>* anchor_dist) {
    const Graph& g = dom.g;
    const std::size_t s = cycle.size();
    std::vector<char> on_c(g.size(), 0);
    for (Vertex v : cycle) on_c[v] = 1;

    if (s == 4) {
        // An external adjacent to two opposite cycle vertices completes K_{2,3}.
        for (Vertex w : cycle)
            for (Vertex v : g.neighbors(w)) {
                if (on_c[v] || !dom.allowed(v)) continue;
                std::vector<std::size_t> att;
                for (std::size_t p = 0; p < 4; ++p)
                    if (g.has_edge(v, cycle[p])) att.push_back(p);
                if (att.size() == 2 && att[1] - att[0] == 2) {
                    std::vector<Vertex> out = cycle;
                    out.push_back(v);
                    return out;
                }
            }
    }

    auto lb = label_externals(dom, cycle, on_c);

    // candidates: external x adjacent to a cycle vertex other than its own
    // root (ear length dist+1), or an external edge joining two branches with
    // different roots (ear length dist+dist+1)
    auto far = [&](Vertex v) {
        if (!anchor_dist) return 0;
        return v == kNoVertex || (*anchor_dist)[v] == kInfDist ? kInfDist / 2 : (*anchor_dist)[v];
    };
    long best_len = -1;
    int best_far = 0;
    Vertex bx = kNoVertex, by = kNoVertex;  // by == kNoVertex: direct-to-cycle
    for (Vertex x = 0; x < g.size(); ++x) {
        if (lb.dist[x] == kInfDist || on_c[x]) continue;
        for (Vertex u : g.neighbors(x)) {
            long len;
            Vertex cx = x, cy = kNoVertex;
            if (on_c[u]) {
                if (u == lb.root[x]) continue;
                len = lb.dist[x] + 1;
            } else if (lb.dist[u] != kInfDist && lb.root[u] != lb.root[x] && x < u) {
                len = lb.dist[x] + lb.dist[u] + 1;
                cy = u;
            } else {
                continue;
            }
            int f = std::max(far(cx), far(cy == kNoVertex ? cx : cy));
            if (best_len < 0 || len < best_len || (len == best_len && f < best_far)) {
                best_len = len;
                best_far = f;
                bx = cx;
                by = cy;
            }
        }
    }
    if (best_len < 0) return {};

    std::vector<Vertex> out = cycle;
    for (Vertex cur = bx; cur != kNoVertex && !on_c[cur]; cur = lb.parent[cur]) out.push_back(cur);
    if (by != kNoVertex)
        for (Vertex cur = by; cur != kNoVertex && !on_c[cur]; cur = lb.parent[cur])
            out.push_back(cur);
    return out;
}

// Grows a nice LDCC around a chordless cycle; on a dirty result (the grown
// set contains a shorter cycle) re-anchors on that cycle and retries.
std::vector<Vertex> grow_nice(const Domain& dom, std::vector<Vertex> cycle,
                              const std::vector<int>* anchor_dist = nullptr) {
    for (int iter = 0; iter < 12; ++iter) {
        std::vector<Vertex> grown = cycle.size() == 3 ? grow_from_clique(dom, cycle)
                                                      : grow_from_cycle(dom, cycle, anchor_dist);
        if (grown.empty()) return {};
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        if (is_nice_ldcc(dom.g, grown)) return grown;
        InducedView view(dom.g, grown);
        auto inner = shortest_cycle(view.size(), [&](std::uint32_t v) { return view.neighbors(v); });
        if (inner.empty() || inner.size() >= cycle.size()) return {};
        cycle.clear();
        for (auto lv : inner) cycle.push_back(view.global(lv));
    }
    return {};
}

}  // namespace

NLdec make_nldec_from_vertices(const Graph& g, std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    NLdec c;
    if (verts.size() == 1) {
        if (g.degree(verts[0]) >= g.max_degree())
            throw std::invalid_argument("NLdec: single vertex must have degree < Delta");
        c.kind = NLdec::Kind::low_degree_node;
        c.root = verts[0];
        c.stem = verts;
        c.sub = Subgraph{&g, std::move(verts)};
        return c;
    }
    if (!is_nice_ldcc(g, verts))
        throw std::invalid_argument("NLdec: vertex set is not a nice LDCC");
    InducedView view(g, verts);
    Vertex root = kNoVertex;
    for (std::uint32_t lv = 0; lv < view.size(); ++lv)
        if (view.degree(lv) == 3) {
            Vertex v = view.global(lv);
            if (root == kNoVertex || g.id(v) > g.id(root)) root = v;
        }
    c.kind = NLdec::Kind::nice_ldcc;
    c.root = root;
    c.stem = {root};
    for (auto u : view.neighbors(view.local(root))) c.stem.push_back(view.global(u));
    std::sort(c.stem.begin(), c.stem.end());
    c.sub = Subgraph{&g, std::move(verts)};
    return c;
}

NLdec extract_nice_ldcc(const Subgraph& sub) {
    const Graph& g = *sub.host;
    if (!is_ldcc(g, sub.verts)) throw std::invalid_argument("extract_nice_ldcc: input is not an LDCC");
    if (is_nice_ldcc(g, sub.verts)) return make_nldec_from_vertices(g, sub.verts);

    InducedView view(g, sub.verts);
    int k = view.strong_diameter();
    std::vector<char> member(g.size(), 0);
    for (Vertex v : sub.verts) member[v] = 1;
    Domain dom{g, [&member](Vertex v) { return member[v] != 0; },
               static_cast<int>(2 * sub.verts.size() + 2)};

    auto cycle = find_induced_cycle(g, sub.verts);
    bool triangle = cycle.size() == 3;
    auto grown = grow_nice(dom, cycle);
    if (grown.empty())
        throw std::runtime_error("extract_nice_ldcc: growth failed (input not 2-connected?)");
    long bound = triangle ? 2L * k + 2 : 4L * k;
    if (static_cast<long>(grown.size()) > bound)
        throw std::runtime_error("extract_nice_ldcc: size bound violated");
    return make_nldec_from_vertices(g, std::move(grown));
}

Orchid natural_orchid(const Graph& g, const NLdec& c, int d) {
    int t = c.kind == NLdec::Kind::low_degree_node ? 1 : 4;
    return make_orchid(g, c.root, c.stem, t, d);
}

// ---- Candidate pool ----------------------------------------------------------

namespace {

bool rank_less(const Graph& g, const NLdec& a, const NLdec& b) {
    if (a.sub.verts.size() != b.sub.verts.size())
        return a.sub.verts.size() < b.sub.verts.size();
    if (g.id(a.root) != g.id(b.root)) return g.id(a.root) < g.id(b.root);
    auto key = [&g](const NLdec& c) {
        std::vector<NodeId> ids;
        ids.reserve(c.sub.verts.size());
        for (Vertex v : c.sub.verts) ids.push_back(g.id(v));
        return ids;
    };
    return key(a) < key(b);
}

}  // namespace

NldecFinder::NldecFinder(const Graph& g, int depth_cap) : g_(g) {
    const int delta = g.max_degree();
    std::vector<NLdec> pool;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) < delta) pool.push_back(make_nldec_from_vertices(g, {v}));

    // Components without cycles cannot host candidates; skip their anchors.
    std::vector<char> cyclic(g.size(), 0);
    for (const auto& comp : connected_components(g)) {
        std::size_t edges = 0;
        for (Vertex v : comp) edges += g.degree(v);
        if (edges / 2 >= comp.size())
            for (Vertex v : comp) cyclic[v] = 1;
    }

    // candidates contained in a radius-R ball have cycles and ears of length
    // <= 2R+1; the growth cap is padded accordingly
    const int grow_cap = 2 * depth_cap + 2;
    Domain dom{g, [](Vertex) { return true; }, grow_cap};
    std::set<std::vector<Vertex>> seen_thetas;
    for (Vertex anchor = 0; anchor < g.size(); ++anchor) {
        if (!cyclic[anchor]) continue;
        CycleCandidate best;
        scan_root(g.size(), [&](std::uint32_t v) { return g.neighbors(v); }, anchor, best);
        if (best.length == kInfDist || best.length > grow_cap + 1) continue;
        std::vector<std::uint32_t> px{best.x}, py{best.y};
        while (px.back() != best.root) px.push_back(best.parent[px.back()]);
        while (py.back() != best.root) py.push_back(best.parent[py.back()]);
        std::vector<char> on_px(g.size(), 0);
        for (auto v : px) on_px[v] = 1;
        std::size_t meet = 0;
        while (!on_px[py[meet]]) ++meet;
        std::uint32_t lca = py[meet];
        std::vector<std::uint32_t> cyc;
        for (auto v : px) {
            cyc.push_back(v);
            if (v == lca) break;
        }
        for (std::size_t i = meet; i-- > 0;) cyc.push_back(py[i]);
        make_chordless(cyc, [&](std::uint32_t a, std::uint32_t b) { return g.has_edge(a, b); });

        auto grown = grow_nice(dom, std::vector<Vertex>(cyc.begin(), cyc.end()), &best.dist);
        if (grown.empty()) continue;
        if (seen_thetas.insert(grown).second) pool.push_back(make_nldec_from_vertices(g, grown));
    }

    std::sort(pool.begin(), pool.end(),
              [&g](const NLdec& a, const NLdec& b) { return rank_less(g, a, b); });
    ranked_ = std::move(pool);
}

std::optional<NLdec> NldecFinder::find(Vertex v, int radius) const {
    auto dist = bfs_distances(g_, std::span<const Vertex>(&v, 1), radius);
    for (const auto& cand : ranked_) {
        bool inside = true;
        for (Vertex w : cand.sub.verts)
            if (dist[w] > radius) { inside = false; break; }
        if (inside) return cand;
    }
    return std::nullopt;
}

std::vector<std::size_t> NldecFinder::select_all(int radius) const {
    std::vector<std::size_t> winner(g_.size(), kNoCandidate);
    std::size_t remaining = g_.size();
    for (std::size_t r = 0; r < ranked_.size() && remaining > 0; ++r) {
        const auto& verts = ranked_[r].sub.verts;
        // quick reject: nothing unassigned near the candidate
        auto root_dist = bfs_distances(g_, std::span<const Vertex>(&verts[0], 1), radius);
        bool useful = false;
        for (Vertex v = 0; v < g_.size() && !useful; ++v)
            if (winner[v] == kNoCandidate && root_dist[v] <= radius) useful = true;
        if (!useful) continue;

        // exact containment: v must be within `radius` of every candidate vertex
        std::vector<int> maxdist = root_dist;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            auto d = bfs_distances(g_, std::span<const Vertex>(&verts[i], 1), radius);
            for (Vertex v = 0; v < g_.size(); ++v)
                maxdist[v] = std::max(maxdist[v], d[v]);
        }
        for (Vertex v = 0; v < g_.size(); ++v)
            if (winner[v] == kNoCandidate && maxdist[v] <= radius) {
                winner[v] = r;
                --remaining;
            }
    }
    return winner;
}

std::optional<NLdec> find_nldec(const Graph& g, Vertex v, int radius) {
    NldecFinder finder(g, radius);
    return finder.find(v, radius);
}

}  // namespace deltacolor
