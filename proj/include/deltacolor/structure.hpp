#pragma once

#include <optional>
#include <vector>

#include "deltacolor/graph.hpp"
#include "deltacolor/orchid.hpp"

namespace deltacolor {

// Nice locally Delta-extendable component: either a single vertex of degree
// less than Delta, or a nice LDCC (2-connected, exactly two vertices of
// induced degree 3, all others induced degree 2).
struct NLdec {
    enum class Kind { low_degree_node, nice_ldcc };
    Kind kind = Kind::low_degree_node;
    Subgraph sub;
    Vertex root = kNoVertex;
    std::vector<Vertex> stem;  // sorted; root plus its 3 component neighbors, or {root}
};

// Degree-choosable component: 2-connected and not a Gallai tree
// (equivalently for 2-connected graphs: neither a clique nor an odd cycle).
bool is_dcc(const Graph& g, std::span<const Vertex> verts);
// LDCC: a DCC that is not an even cycle.
bool is_ldcc(const Graph& g, std::span<const Vertex> verts);
// Nice LDCC: LDCC with degree sequence (3,3,2,...,2).
bool is_nice_ldcc(const Graph& g, std::span<const Vertex> verts);

inline bool is_dcc(const Subgraph& s) { return is_dcc(*s.host, s.verts); }
inline bool is_ldcc(const Subgraph& s) { return is_ldcc(*s.host, s.verts); }
inline bool is_nice_ldcc(const Subgraph& s) { return is_nice_ldcc(*s.host, s.verts); }

// Shortest (hence chordless) cycle in the induced subgraph. Precondition: the
// subgraph contains a cycle (true for every LDCC).
std::vector<Vertex> find_induced_cycle(const Graph& g, std::span<const Vertex> verts);
inline std::vector<Vertex> find_induced_cycle(const Subgraph& s) {
    return find_induced_cycle(*s.host, s.verts);
}

// Extracts an induced nice LDCC of at most 4k vertices from an LDCC of strong
// diameter k >= 2 (at most 2k+2 when the minimal induced cycle is a triangle).
NLdec extract_nice_ldcc(const Subgraph& sub);

// Natural root/stem: root = degree-3 vertex of highest ID, stem = root plus
// its 3 neighbors in the component; single low-degree vertices are their own
// root and stem. Fills the NLdec from a verified nice component.
NLdec make_nldec_from_vertices(const Graph& g, std::vector<Vertex> verts);

// Orchid of radius d around the natural stem.
Orchid natural_orchid(const Graph& g, const NLdec& c, int d);

// Shared candidate pool for NLdec discovery. Candidates are induced nice
// LDCCs grown from short cycles (one anchored per vertex, deduplicated),
// globally ordered by (vertex count, root ID, lexicographic vertex list).
class NldecFinder {
public:
    // depth_cap bounds the BFS depth used while growing candidates.
    NldecFinder(const Graph& g, int depth_cap);

    // Smallest candidate whose vertex set lies inside ball(v, radius); none if
    // the search finds no candidate there.
    std::optional<NLdec> find(Vertex v, int radius) const;

    // One selection per vertex (index-aligned); kNoCandidate marks failures.
    static constexpr std::size_t kNoCandidate = static_cast<std::size_t>(-1);
    std::vector<std::size_t> select_all(int radius) const;

    const std::vector<NLdec>& candidates() const { return ranked_; }

private:
    const Graph& g_;
    std::vector<NLdec> ranked_;  // low-degree singletons first, then thetas
};

// Convenience wrapper matching the one-shot operation shape.
std::optional<NLdec> find_nldec(const Graph& g, Vertex v, int radius);

}  // namespace deltacolor
