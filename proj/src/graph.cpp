#include "deltacolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace deltacolor {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        std::vector<NodeId> ids) {
    Graph g;
    if (ids.empty()) {
        ids.resize(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    }
    if (ids.size() != n) throw std::invalid_argument("graph: id list size mismatch");
    {
        auto sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("graph: duplicate node IDs");
    }

    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    g.offsets_.assign(n + 1, 0);
    g.adjacency_.reserve(edges.size() * 2);
    g.delta_ = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto& row = adj[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("graph: duplicate edge rejected");
        g.offsets_[v + 1] = g.offsets_[v] + row.size();
        g.adjacency_.insert(g.adjacency_.end(), row.begin(), row.end());
        g.delta_ = std::max(g.delta_, static_cast<int>(row.size()));
    }
    g.ids_ = std::move(ids);
    return g;
}

Graph Graph::load(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    long line_no = 0;
    std::vector<std::pair<NodeId, NodeId>> raw;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) { n = -1; continue; }
                throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                         ": expected header 'n m'");
            }
            long delta_override;  // accepted, recomputed anyway
            ss >> delta_override;
            if (n < 0 || m < 0)
                throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                         ": negative counts");
            continue;
        }
        NodeId u, v;
        if (!(ss >> u)) continue;  // blank/comment line
        if (!(ss >> v))
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected 'u v'");
        raw.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("parse error: missing header");
    if (static_cast<long>(raw.size()) != m)
        throw std::runtime_error("parse error: header declares " + std::to_string(m) +
                                 " edges, found " + std::to_string(raw.size()));

    // Labels in [0,n) index directly (covers isolated vertices); otherwise the
    // n distinct labels appearing in edges become the vertex set.
    bool direct = true;
    for (auto& [u, v] : raw)
        if (u >= static_cast<NodeId>(n) || v >= static_cast<NodeId>(n)) { direct = false; break; }

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.size());
    std::vector<NodeId> ids;
    if (direct) {
        for (auto& [u, v] : raw)
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
        std::vector<NodeId> labels;
        labels.reserve(raw.size() * 2);
        for (auto& [u, v] : raw) {
            labels.push_back(u);
            labels.push_back(v);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (static_cast<long>(labels.size()) != n)
            throw std::runtime_error("parse error: header declares " + std::to_string(n) +
                                     " nodes, edges mention " + std::to_string(labels.size()) +
                                     " distinct IDs");
        std::unordered_map<NodeId, Vertex> index;
        index.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<Vertex>(i);
        for (auto& [u, v] : raw) edges.emplace_back(index[u], index[v]);
        ids = std::move(labels);
    }
    try {
        return from_edges(static_cast<std::size_t>(n), edges, std::move(ids));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("parse error: ") + e.what());
    }
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load(in);
}

void Graph::save(std::ostream& out) const {
    out << size() << ' ' << edge_count() << '\n';
    for (Vertex v = 0; v < size(); ++v)
        for (Vertex u : neighbors(v))
            if (v < u) out << id(v) << ' ' << id(u) << '\n';
}

Vertex Graph::vertex_of(NodeId nid) const {
    for (Vertex v = 0; v < size(); ++v)
        if (ids_[v] == nid) return v;
    return kNoVertex;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Subgraph::contains(Vertex v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

// ---- InducedView -----------------------------------------------------------

std::size_t InducedView::Lookup::count(Vertex v) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), v,
                               [](const auto& p, Vertex x) { return p.first < x; });
    return it != entries.end() && it->first == v ? 1 : 0;
}

std::uint32_t InducedView::Lookup::at(Vertex v) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), v,
                               [](const auto& p, Vertex x) { return p.first < x; });
    if (it == entries.end() || it->first != v)
        throw std::out_of_range("InducedView: vertex not in view");
    return it->second;
}

InducedView::InducedView(const Graph& g, std::span<const Vertex> verts)
    : verts_(verts.begin(), verts.end()) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    local_of_.entries.reserve(verts_.size());
    for (std::uint32_t i = 0; i < verts_.size(); ++i)
        local_of_.entries.emplace_back(verts_[i], i);
    adj_.resize(verts_.size());
    for (std::uint32_t i = 0; i < verts_.size(); ++i) {
        for (Vertex u : g.neighbors(verts_[i]))
            if (local_of_.count(u)) adj_[i].push_back(local_of_.at(u));
        std::sort(adj_[i].begin(), adj_[i].end());
    }
}

std::uint32_t InducedView::local(Vertex v) const { return local_of_.at(v); }

std::vector<int> InducedView::bfs_from(std::uint32_t src) const {
    std::vector<int> dist(size(), kInfDist);
    std::deque<std::uint32_t> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto u : adj_[v])
            if (dist[u] == kInfDist) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

bool InducedView::is_connected() const {
    if (size() == 0) return false;
    auto d = bfs_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kInfDist; });
}

int InducedView::strong_diameter() const {
    int diam = 0;
    for (std::uint32_t v = 0; v < size(); ++v) {
        auto d = bfs_from(v);
        for (int x : d) {
            if (x == kInfDist) return kInfDist;
            diam = std::max(diam, x);
        }
    }
    return diam;
}

namespace {

// Iterative Hopcroft–Tarjan over an adjacency callback. Emits biconnected
// components as edge lists.
template <typename AdjFn, typename EmitFn>
void biconnected_components(std::size_t n, AdjFn&& adjacency, EmitFn&& emit,
                            std::vector<std::uint32_t>* articulation_out) {
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> is_art(n, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_stack;
    int timer = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t next = 0;
    };
    for (std::uint32_t root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& fr = stack.back();
            auto nb = adjacency(fr.v);
            if (fr.next < nb.size()) {
                std::uint32_t u = nb[fr.next++];
                if (disc[u] == -1) {
                    parent[u] = static_cast<int>(fr.v);
                    if (fr.v == root) ++root_children;
                    edge_stack.emplace_back(fr.v, u);
                    disc[u] = low[u] = timer++;
                    stack.push_back({u});
                } else if (static_cast<int>(u) != parent[fr.v] && disc[u] < disc[fr.v]) {
                    edge_stack.emplace_back(fr.v, u);
                    low[fr.v] = std::min(low[fr.v], disc[u]);
                }
            } else {
                std::uint32_t v = fr.v;
                stack.pop_back();
                if (stack.empty()) break;
                std::uint32_t p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    // pop one component
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> comp;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(e);
                        if (e.first == p && e.second == v) break;
                    }
                    if (!comp.empty()) emit(comp);
                    if (p != root || root_children > 1) is_art[p] = true;
                }
            }
        }
        // isolated vertex: no component emitted, no articulation
    }
    if (articulation_out) {
        articulation_out->clear();
        for (std::uint32_t v = 0; v < n; ++v)
            if (is_art[v]) articulation_out->push_back(v);
    }
}

template <typename AdjFn>
BlockDecomposition decompose(std::size_t n, AdjFn&& adjacency) {
    BlockDecomposition out;
    std::vector<std::uint32_t> arts;
    biconnected_components(
        n, adjacency,
        [&](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& comp_edges) {
            std::vector<Vertex> vs;
            for (auto& [a, b] : comp_edges) {
                vs.push_back(a);
                vs.push_back(b);
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            out.blocks.push_back(std::move(vs));
        },
        &arts);
    out.cut_vertices.assign(arts.begin(), arts.end());
    out.blocks_of_vertex.assign(n, {});
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (Vertex v : out.blocks[b]) out.blocks_of_vertex[v].push_back(b);
    return out;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    return decompose(g.size(), [&](std::uint32_t v) { return g.neighbors(v); });
}

BlockDecomposition block_decomposition(const InducedView& view) {
    return decompose(view.size(), [&](std::uint32_t v) { return view.neighbors(v); });
}

bool InducedView::is_biconnected() const {
    if (size() < 3) return false;
    if (!is_connected()) return false;
    std::vector<std::uint32_t> arts;
    biconnected_components(
        size(), [&](std::uint32_t v) { return neighbors(v); },
        [](const auto&) {}, &arts);
    return arts.empty();
}

// ---- BFS utilities ---------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources, int max_dist) {
    std::vector<int> dist(g.size(), kInfDist);
    std::deque<Vertex> q;
    for (Vertex s : sources) {
        if (dist[s] == kInfDist) {
            dist[s] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (max_dist >= 0 && dist[v] >= max_dist) continue;
        for (Vertex u : g.neighbors(v))
            if (dist[u] == kInfDist) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

std::optional<int> set_distance(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("set_distance: empty set");
    std::vector<char> in_b(g.size(), 0);
    for (Vertex v : b) in_b[v] = 1;
    for (Vertex v : a)
        if (in_b[v]) return 0;
    auto dist = bfs_distances(g, a);
    int best = kInfDist;
    for (Vertex v : b) best = std::min(best, dist[v]);
    if (best == kInfDist) return std::nullopt;
    return best;
}

std::vector<Vertex> ball_of_set(const Graph& g, std::span<const Vertex> sources, int r) {
    auto dist = bfs_distances(g, sources, r);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (dist[v] <= r) out.push_back(v);
    return out;
}

Subgraph ball(const Graph& g, Vertex v, int r) {
    Vertex src[1] = {v};
    return Subgraph{&g, ball_of_set(g, src, r)};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.size(), 0);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// ---- Structural predicates ---------------------------------------------------

bool is_clique(const InducedView& view) {
    std::size_t n = view.size();
    for (std::uint32_t v = 0; v < n; ++v)
        if (view.neighbors(v).size() != n - 1) return false;
    return true;
}

bool is_cycle(const InducedView& view) {
    if (view.size() < 3) return false;
    for (std::uint32_t v = 0; v < view.size(); ++v)
        if (view.degree(v) != 2) return false;
    return view.is_connected();
}

bool is_gallai_tree(const Graph& g, std::span<const Vertex> verts) {
    InducedView view(g, verts);
    if (!view.is_connected()) throw std::invalid_argument("is_gallai_tree: disconnected input");
    if (view.size() == 1) return true;
    auto dec = block_decomposition(view);
    for (const auto& block : dec.blocks) {
        InducedView bv(g, [&] {
            std::vector<Vertex> globals;
            globals.reserve(block.size());
            for (Vertex lv : block) globals.push_back(view.global(lv));
            return globals;
        }());
        if (is_clique(bv)) continue;
        if (is_cycle(bv) && bv.size() % 2 == 1) continue;
        return false;
    }
    return true;
}

}  // namespace deltacolor
