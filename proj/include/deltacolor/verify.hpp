#pragma once

#include <string>
#include <vector>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"
#include "deltacolor/ruling.hpp"

namespace deltacolor {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // nonempty on failure
};

struct VerificationReport {
    std::vector<Check> checks;

    bool summary() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

// Fails with a witness edge if improper, a vertex if uncolored or over the cap.
VerificationReport verify_proper_coloring(const Graph& g, const PartialColoring& coloring,
                                          int palette_cap);

// Delta >= 3 and no (Delta+1)-clique component.
VerificationReport verify_brooks_preconditions(const Graph& g);

// Theorem-level output contract of the ruling family computation:
// (a) empty contention digraph, (b) pairwise distance(member, stem of other)
// >= d+1, (c) measured coverage radius within the recorded chain bound.
VerificationReport verify_ruling_family(const FamilyState& st, const RulingOutcome& outcome);

// Per-stage degree bounds from the elimination-walk analysis, asserted
// exactly against the stage snapshots.
VerificationReport verify_degree_bounds(const std::vector<StageSnapshot>& snapshots,
                                        const RulingParams& params, int host_delta);

// Backtracking oracle: does a proper coloring with colors [max_degree] exist?
// Capped input size.
bool exhaustive_delta_colorable(const Graph& g, std::size_t cap = 12);

// True iff every assignment of degree-sized lists over [max_palette] admits a
// proper list coloring. Sound for |V| <= 6, max_palette <= 6.
bool brute_force_list_choosable(const Graph& g, std::span<const Vertex> verts, int max_palette);
inline bool brute_force_list_choosable(const Subgraph& s, int max_palette) {
    return brute_force_list_choosable(*s.host, s.verts, max_palette);
}

// ---- Small-graph enumeration (test/oracle support) ---------------------------

// All connected graphs on exactly n labeled vertices where every vertex has
// degree `degree`.
std::vector<Graph> enumerate_connected_regular(std::size_t n, int degree);

// All connected graphs on exactly n labeled vertices with max degree <= cap.
std::vector<Graph> enumerate_connected_graphs(std::size_t n, int max_degree);

}  // namespace deltacolor
