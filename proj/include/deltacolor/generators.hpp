#pragma once

#include <cstdint>
#include <string>

#include "deltacolor/graph.hpp"

namespace deltacolor {

// Pairing-model random regular graph. Rejects non-simple pairings, then
// rejects disconnected outputs and outputs containing a (Delta+1)-clique
// component, retrying with derived sub-seeds. Seed-reproducible.
Graph gen_random_regular(std::size_t n, int degree, std::uint64_t seed);

// rows x cols torus with wraparound; 4-regular. Requires rows, cols >= 3.
Graph gen_torus_grid(std::size_t rows, std::size_t cols);

// Chain of cliques, consecutive cliques sharing one cut vertex. Every block
// is a clique, so the graph is a Gallai tree.
Graph gen_tree_of_cliques(std::size_t num_cliques, std::size_t clique_size);

// Chain of theta gadgets (two degree-3 hubs joined by three disjoint paths)
// connected by bridge paths; max degree 3, minimal LDCCs are the thetas.
Graph gen_theta_chain(std::size_t blocks, std::uint64_t seed = 0);

// Parse "kind:key=val,key=val" strings used by the CLI, e.g.
// "random_regular:n=256,delta=3", "torus_grid:rows=8,cols=8",
// "tree_of_cliques:cliques=4,size=4", "theta_chain:blocks=3".
Graph gen_graph(const std::string& descriptor, std::uint64_t seed);

}  // namespace deltacolor
