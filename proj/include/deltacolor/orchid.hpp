#pragma once

#include <vector>

#include "deltacolor/graph.hpp"

namespace deltacolor {

// (t,d)-orchid of a subgraph H: a designated root in H, a connected induced
// stem in H of at most t nodes containing the root, and the halo = all host
// vertices within distance d of the stem. The orchid's node set is the halo.
struct Orchid {
    Vertex root = kNoVertex;
    std::vector<Vertex> stem;  // sorted
    std::vector<Vertex> halo;  // sorted; includes the stem
    int t = 0;                 // stem budget
    int d = 0;                 // halo radius

    bool halo_contains(Vertex v) const;
};

Orchid make_orchid(const Graph& g, Vertex root, std::vector<Vertex> stem, int t, int d);

}  // namespace deltacolor
