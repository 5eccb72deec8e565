#pragma once

#include <string>
#include <vector>

#include "deltacolor/graph.hpp"
#include "deltacolor/ledger.hpp"
#include "deltacolor/ruling.hpp"
#include "deltacolor/structure.hpp"
#include "deltacolor/symmetry.hpp"

namespace deltacolor {

// Colors 1..Delta; 0 is the uncolored state. The pipeline never uses Delta+1.
struct PartialColoring {
    std::vector<int> col;

    explicit PartialColoring(std::size_t n = 0) : col(n, 0) {}
    bool colored(Vertex v) const { return col[v] != 0; }
};

// layer[v] = -1 marks vertices outside the partition.
struct LayeredPartition {
    std::vector<int> layer;
    int height = 0;
};

// layer(v) = dist(v, targets); errors on unreachable vertices.
LayeredPartition layer_by_distance(const Graph& g, std::span<const Vertex> targets);

// Colors every partitioned vertex from its list, layers in decreasing index,
// greedy over Linial color classes inside a layer, smallest list color free of
// already-colored neighbors. lists[v] may be empty for unpartitioned vertices.
// Charges (palette+1) rounds per nonempty layer.
void color_layered(const Graph& g, const LayeredPartition& part,
                   const std::vector<std::vector<int>>& lists, PartialColoring& coloring,
                   const VertexColoring& classes, RoundLedger& ledger, const std::string& phase);

// Ensures the component has a flexible node (an uncolored vertex that will
// always retain a free color in [Delta]): either one exists in the stem, or
// the root is colored to repeat a color around a degree-2 stem neighbor.
struct FlexibleOutcome {
    Vertex flexible = kNoVertex;
    bool colored_root = false;
};
FlexibleOutcome create_flexible_node(const Graph& g, const NLdec& comp, PartialColoring& coloring);

// Colors all remaining vertices of a family of components with empty
// contention digraph, exterior fully colored: flexible nodes, multi-origin
// BFS inside the uncolored graph, layers in decreasing distance.
void color_family(const Graph& g, const std::vector<NLdec>& members, PartialColoring& coloring,
                  const VertexColoring& classes, RoundLedger& ledger, const std::string& phase);

struct DetStats {
    std::size_t n = 0;
    int delta = 0;
    long selection_radius = 0;
    long k = 0;
    std::size_t family_size = 0;
    std::size_t survivor_count = 0;
    long coverage_radius = 0;
    long chain_bound = 0;
    int h_layers = 0;
    std::vector<StageSnapshot> snapshots;
};

struct DetResult {
    PartialColoring coloring;
    DetStats stats;
};

struct BrooksViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejects Delta < 3 and (Delta+1)-clique components.
void require_brooks_preconditions(const Graph& g);

// The deterministic pipeline: per-node component selection in the
// 2*log_{Delta-1} n ball, ruling subgraphs with d=1, t=4,
// k = 16*log_{Delta-1} n + 4, distance layering, layered coloring, flexible
// nodes, family completion.
DetResult delta_color_deterministic(const Graph& g, RoundLedger& ledger);

}  // namespace deltacolor
