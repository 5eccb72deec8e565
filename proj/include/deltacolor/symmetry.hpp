#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltacolor/ledger.hpp"
#include "deltacolor/sim.hpp"

namespace deltacolor {

// Colors are 1..palette_size.
struct VertexColoring {
    long palette_size = 0;
    std::vector<long> color;

    bool proper_on(const Topology& topo) const;
};

// alpha: pairwise member distance >= alpha; beta: every vertex within beta of
// a member. beta_claimed is the algorithmic bound; the verifier measures the
// real value. dominator[v] points one hop along the drop chain that removed v
// (kNoVertex for members), so coverage chains can be resolved exactly.
struct RulingSetResult {
    std::vector<Vertex> members;  // sorted
    int alpha = 2;
    long beta_claimed = 0;
    std::vector<Vertex> dominator;
};

// Ledger adapter: symmetric primitives run on the host graph (dilation 1) or
// on a virtual graph (charged native * dilation); the caller picks.
struct PhaseCharger {
    RoundLedger* ledger = nullptr;
    std::string phase;
    ChargeMode mode = ChargeMode::superstep;
    long dilation = 1;

    void charge(long native) const {
        if (!ledger) return;
        if (mode == ChargeMode::virtual_graph)
            ledger->add_virtual(phase, native, dilation);
        else if (mode == ChargeMode::ball_collect)
            ledger->add_ball(phase, native);
        else
            ledger->add_superstep(phase, native);
    }
    PhaseCharger sub(const std::string& suffix) const {
        return {ledger, phase + suffix, mode, dilation};
    }
};

inline PhaseCharger graph_charger(RoundLedger& ledger, std::string phase) {
    return {&ledger, std::move(phase), ChargeMode::superstep, 1};
}
inline PhaseCharger virtual_charger(RoundLedger& ledger, std::string phase, long dilation) {
    return {&ledger, std::move(phase), ChargeMode::virtual_graph, dilation};
}

// Iterated polynomial color reduction from unique IDs. Palette <= 8 * Delta^2
// (at least 4); round count is log*-like in the ID universe.
VertexColoring linial_coloring(const Topology& topo, const PhaseCharger& charge);

// Digit-elimination ruling set from a proper d-coloring: write colors with c
// digits in base ceil(d^(1/c)); per digit stage, a candidate yields to any
// neighboring candidate with a smaller digit. alpha=2,
// beta <= c * ceil(d^(1/c)), c rounds.
RulingSetResult ruling_set_from_coloring(const Topology& topo, const VertexColoring& coloring,
                                         int c, const PhaseCharger& charge);

// Greedy MIS over color classes; at most palette_size rounds.
std::vector<Vertex> mis_from_coloring(const Topology& topo, const VertexColoring& coloring,
                                      const PhaseCharger& charge);

// O(log log n) sampling iterations followed by a deterministic ruling-set
// fallback on the residual vertices. Same seed, same output.
RulingSetResult randomized_ruling_set(const Topology& topo, std::uint64_t seed,
                                      const PhaseCharger& charge);

// Host-graph conveniences.
VertexColoring linial_coloring(const Graph& g, RoundLedger& ledger, const std::string& phase);

}  // namespace deltacolor
