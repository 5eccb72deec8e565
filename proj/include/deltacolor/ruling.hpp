#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltacolor/graph.hpp"
#include "deltacolor/ledger.hpp"
#include "deltacolor/orchid.hpp"
#include "deltacolor/sim.hpp"

namespace deltacolor {

inline constexpr std::size_t kNoMember = static_cast<std::size_t>(-1);

// One subgraph of the family with its fixed orchid and precomputed walks.
struct FamilyMember {
    Subgraph sub;
    Orchid orchid;
    std::vector<Vertex> walk_full;  // visits every vertex of sub, starts/ends at root
    std::vector<Vertex> walk_stem;  // same over the stem
    bool alive = true;
    int elim_stage = -1;             // snapshot index of the eliminating stage
    std::size_t elim_target = kNoMember;  // member charged for the elimination
};

struct RulingParams {
    long k = 0;       // max member size
    int t = 0;        // max stem size
    int d = 0;        // orchid halo radius
    bool randomized = false;  // use the sampled ruling set inside RulingOrchids
    std::uint64_t seed = 0;
};

// Telemetry captured after every stage; the verifier asserts the per-stage
// degree bounds against these.
struct StageSnapshot {
    std::string stage;
    int iter = 0;
    std::size_t alive_count = 0;
    long native_rounds = 0;
    int conflict_max_degree = -1;    // distance-d conflict graph, when built
    int contention_max_out = -1;
    int contention_max_in = -1;
    long max_elim_hop = 0;           // max dist(victim, charged member) this stage
    long connect_x = -1;             // sibling-graph connecting distance
    long p = -1, ell = -1;           // pausing-walk parameters
    long t_max_finish = 0;           // latest token finish time (walk stages)
    long token_budget = -1;          // enforced per-token step budget
    long post_conflict_edges = -1;   // conflict-graph edges among survivors (ruling stage)
};

class FamilyState {
public:
    FamilyState(const Graph& g, std::vector<FamilyMember> members, RulingParams params);

    const Graph& graph() const { return *g_; }
    const RulingParams& params() const { return params_; }
    std::vector<FamilyMember>& members() { return members_; }
    const std::vector<FamilyMember>& members() const { return members_; }
    std::vector<std::size_t> alive_indices() const;
    std::vector<StageSnapshot>& snapshots() { return snapshots_; }
    const std::vector<StageSnapshot>& snapshots() const { return snapshots_; }

    // member indices (alive only) whose halo contains v
    std::vector<std::size_t> halos_at(Vertex v) const;

    void eliminate(std::size_t member, std::size_t target, int stage);

private:
    const Graph* g_;
    std::vector<FamilyMember> members_;
    RulingParams params_;
    std::vector<StageSnapshot> snapshots_;
    std::vector<std::vector<std::size_t>> halo_index_;  // vertex -> members
};

// Walk scripts: DFS traversal of a BFS spanning tree rooted at `root`,
// restricted to `verts`; starts and ends at the root, 2(|verts|-1) steps.
std::vector<Vertex> traversal_walk(const Graph& g, std::span<const Vertex> verts, Vertex root);

FamilyMember make_member(const Graph& g, std::vector<Vertex> verts, std::vector<Vertex> stem,
                         Vertex root, const RulingParams& params);

// ---- Virtual graphs over the family ------------------------------------------

// Distance-d conflict graph of the alive members' orchids; dilation 2t+3d.
VirtualGraph conflict_graph(const FamilyState& st, int d,
                            std::vector<std::size_t>* index_map = nullptr);

// Contention digraph: edge (H,H') iff V(H) intersects the orchid of H'.
VirtualGraph contention_digraph(const FamilyState& st,
                                std::vector<std::size_t>* index_map = nullptr);

// x-sibling graph: H',H'' joined when both orchids intersect a common member H
// at H-internal distance <= x (H may equal H'); dilation x + 2d + 2t.
VirtualGraph sibling_graph(const FamilyState& st, long x,
                           std::vector<std::size_t>* index_map = nullptr);

// Branch nodes: multiset of size x from the padded stem walk, a
// distance-ceil(t/x) dominating set of the stem.
std::vector<Vertex> branch_nodes(const Graph& g, const Orchid& orchid,
                                 std::span<const Vertex> stem_walk, int t, long x);

// ---- Stages -------------------------------------------------------------------

// Stage 1: stem-walk elimination; caps the conflict-graph degree at 2t^2*D^3d.
void elimination_walk(FamilyState& st, RoundLedger& ledger);

// Stage 2: ruling set on the conflict graph; survivors' orchids pairwise at
// distance >= d+1, contention outdegree <= 2k/d.
void ruling_orchids(FamilyState& st, RoundLedger& ledger);

// Stage 3: full-subgraph walk with stem detours; contention indegree <= 6kt.
void directional_elimination_walk(FamilyState& st, RoundLedger& ledger);

// Stage 4a (iteration i): ruling set on the sibling graph at connecting
// distance 4k/(log^(i) k)^2; outdegree drops to (log^(i) k)^2 / 2.
void outdegree_reduction(FamilyState& st, int iter, RoundLedger& ledger);

// Stage 4b (iteration i): walk with pauses at branch nodes.
void pausing_elimination_walk(FamilyState& st, int iter, RoundLedger& ledger);

// ---- Orchestration ---------------------------------------------------------------

struct RulingOutcome {
    std::vector<std::size_t> survivors;          // indices into the input family
    std::vector<StageSnapshot> snapshots;
    long coverage_radius = 0;  // measured: max dist(eliminated member, nearest survivor)
    long chain_bound = 0;      // sum of per-stage max elimination hops
    std::vector<std::size_t> final_target;  // per member: surviving member it resolves to
};

// Full pipeline: EliminationWalk, RulingOrchids, early exit when 2k/d < 1,
// DirectionalEliminationWalk, alternating reductions until
// (log^(i) k)^4 <= max(log* n, 16), final MIS on the contention digraph.
// Output family's contention digraph is empty.
RulingOutcome ruling_subgraphs(FamilyState& st, RoundLedger& ledger);

}  // namespace deltacolor
