#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace deltacolor {

using Vertex = std::uint32_t;
using NodeId = std::uint64_t;

inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Simple undirected graph. Immutable after construction; safe for concurrent
// reads. Vertices are dense indices 0..n-1; every vertex carries a unique
// 64-bit ID used for all tie-breaking (never array positions).
class Graph {
public:
    Graph() = default;

    // Build from an edge list over vertex indices 0..n-1. Rejects self-loops,
    // duplicate edges and out-of-range endpoints.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                            std::vector<NodeId> ids = {});

    // Edge-list text format: first line "n m" (optional third token overrides
    // the reported max degree); then m lines "u v"; '#' starts a comment.
    static Graph load(std::istream& in);
    static Graph load_file(const std::string& path);
    void save(std::ostream& out) const;

    std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    int max_degree() const { return delta_; }

    NodeId id(Vertex v) const { return ids_[v]; }
    // Index lookup for an external ID; kNoVertex when absent.
    Vertex vertex_of(NodeId id) const;

    bool has_edge(Vertex u, Vertex v) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;  // sorted per vertex
    std::vector<NodeId> ids_;
    int delta_ = 0;
};

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Connected vertex subset of a host graph, stored sorted.
struct Subgraph {
    const Graph* host = nullptr;
    std::vector<Vertex> verts;  // sorted, unique

    bool contains(Vertex v) const;
    std::size_t size() const { return verts.size(); }
};

// Subgraph with local adjacency materialized; used by the structural
// predicates which need induced degrees and induced distances.
class InducedView {
public:
    InducedView(const Graph& g, std::span<const Vertex> verts);

    std::size_t size() const { return verts_.size(); }
    Vertex global(std::uint32_t local) const { return verts_[local]; }
    std::uint32_t local(Vertex v) const;
    bool contains(Vertex v) const { return local_of_.count(v) > 0; }
    std::span<const std::uint32_t> neighbors(std::uint32_t local) const {
        return adj_[local];
    }
    int degree(std::uint32_t local) const { return static_cast<int>(adj_[local].size()); }

    bool is_connected() const;
    // 2-connected: connected, >= 3 vertices, no articulation vertex.
    bool is_biconnected() const;
    std::vector<int> bfs_from(std::uint32_t local_src) const;
    // max over pairs of induced distances; kInfDist when disconnected.
    int strong_diameter() const;

private:
    std::vector<Vertex> verts_;
    std::vector<std::vector<std::uint32_t>> adj_;
    // flat map for smallish subgraphs
    struct Lookup {
        std::vector<std::pair<Vertex, std::uint32_t>> entries;  // sorted by key
        std::size_t count(Vertex v) const;
        std::uint32_t at(Vertex v) const;
    } local_of_;
};

// ---- BFS utilities on the host graph -------------------------------------

// Distances from a source set; vertices beyond max_dist (or unreachable) get
// kInfDist. max_dist < 0 means unbounded.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                               int max_dist = -1);

// min over pairs of shortest-path lengths between the two vertex sets.
// Returns nullopt when they lie in different components.
std::optional<int> set_distance(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b);

// Induced subgraph on {u : dist(v,u) <= r}.
Subgraph ball(const Graph& g, Vertex v, int r);

// Vertices within distance r of a source set, sorted.
std::vector<Vertex> ball_of_set(const Graph& g, std::span<const Vertex> sources, int r);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// ---- Block decomposition (Def: maximal 2-connected subgraphs) -------------

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;  // vertex sets, each sorted
    std::vector<Vertex> cut_vertices;         // sorted
    // block_tree[b] = vertices of block b (bipartite adjacency block <-> vertex
    // is implied); vertex side recoverable via membership.
    std::vector<std::vector<std::size_t>> blocks_of_vertex;  // per vertex, block indices
};

BlockDecomposition block_decomposition(const Graph& g);
BlockDecomposition block_decomposition(const InducedView& view);

// ---- Structural predicates -------------------------------------------------

bool is_clique(const InducedView& view);
// Cycle: connected, every induced degree exactly 2.
bool is_cycle(const InducedView& view);

// Gallai tree: connected graph whose blocks are each a clique or an odd cycle.
bool is_gallai_tree(const Graph& g, std::span<const Vertex> verts);
inline bool is_gallai_tree(const Subgraph& s) { return is_gallai_tree(*s.host, s.verts); }

}  // namespace deltacolor
