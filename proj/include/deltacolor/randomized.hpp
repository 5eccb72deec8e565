#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"
#include "deltacolor/ledger.hpp"

namespace deltacolor {

// Haven vertices sampled far from the component family. Each T-node marks a
// pair of non-adjacent neighbors which take color 1, guaranteeing the T-node
// a free color in [Delta] at the end.
struct TNodeOutcome {
    std::vector<Vertex> t_nodes;  // sorted
    std::map<Vertex, std::pair<Vertex, Vertex>> marked;
    int conflict_distance = 0;
    int p_exponent = 0;  // selection probability Delta^-p_exponent
};

// Selection w.p. Delta^-p_exp; symmetric unselection within distance b; each
// survivor marks a random non-adjacent neighbor pair with color 1 (or
// renounces if its neighborhood is a clique).
TNodeOutcome t_node_sampling(const Graph& g, std::span<const Vertex> participants, int b,
                             int p_exp, std::uint64_t seed, PartialColoring& coloring,
                             RoundLedger& ledger);

// BFS distance from S inside the subgraph induced by uncolored vertices.
// Unreachable uncolored vertices are reported, not fatal.
struct UncoloredLayers {
    LayeredPartition part;
    std::vector<Vertex> unreachable;
};
UncoloredLayers uncolored_distance_layers(const Graph& g, std::span<const Vertex> s,
                                          const PartialColoring& coloring);

struct RandConfig {
    int b = 4;
    int p_exp = 4;
    long d_override = 0;  // 0: use 20*log_Delta(log2 n) + 80
    int max_retries = 8;
    bool paper_constants = false;  // b = p_exp = 34
};

struct RandStats {
    std::size_t n = 0;
    int delta = 0;
    long d = 0;
    std::size_t family_size = 0;
    std::size_t survivor_count = 0;
    std::size_t participant_count = 0;
    std::size_t t_node_count = 0;
    int retries_used = 0;
    int h_layers = 0;
};

struct RandResult {
    bool success = false;
    PartialColoring coloring;
    RandStats stats;
    std::string failure_reason;
};

// The randomized pipeline: component discovery at size <= 5d, ruling
// subgraphs with the sampled ruling set, T-node sampling among far vertices,
// uncolored-distance layering, layered coloring, T-node self-coloring, family
// completion. Retries with a derived seed when marked vertices cut someone
// off; never emits an improper coloring.
RandResult delta_color_randomized(const Graph& g, std::uint64_t seed, const RandConfig& config,
                                  RoundLedger& ledger);

}  // namespace deltacolor
