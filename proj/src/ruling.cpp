#include "deltacolor/ruling.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "deltacolor/mathutil.hpp"
#include "deltacolor/structure.hpp"
#include "deltacolor/symmetry.hpp"

namespace deltacolor {

// ---- Family construction ------------------------------------------------------

FamilyState::FamilyState(const Graph& g, std::vector<FamilyMember> members, RulingParams params)
    : g_(&g), members_(std::move(members)), params_(params) {
    halo_index_.resize(g.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (Vertex v : members_[i].orchid.halo) halo_index_[v].push_back(i);
}

std::vector<std::size_t> FamilyState::alive_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].alive) out.push_back(i);
    return out;
}

std::vector<std::size_t> FamilyState::halos_at(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t i : halo_index_[v])
        if (members_[i].alive) out.push_back(i);
    return out;
}

void FamilyState::eliminate(std::size_t member, std::size_t target, int stage) {
    auto& m = members_[member];
    if (!m.alive) throw std::logic_error("eliminate: member already dead");
    m.alive = false;
    m.elim_stage = stage;
    m.elim_target = target;
}

std::vector<Vertex> traversal_walk(const Graph& g, std::span<const Vertex> verts, Vertex root) {
    InducedView view(g, verts);
    std::uint32_t r = view.local(root);
    // BFS spanning tree, children sorted by ID
    std::vector<std::int64_t> parent(view.size(), -1);
    std::vector<std::vector<std::uint32_t>> children(view.size());
    std::deque<std::uint32_t> q{r};
    std::vector<char> seen(view.size(), 0);
    seen[r] = 1;
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        std::vector<std::uint32_t> nb(view.neighbors(v).begin(), view.neighbors(v).end());
        std::sort(nb.begin(), nb.end(), [&](std::uint32_t a, std::uint32_t b) {
            return g.id(view.global(a)) < g.id(view.global(b));
        });
        for (auto u : nb)
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                children[v].push_back(u);
                q.push_back(u);
            }
    }
    for (std::size_t v = 0; v < view.size(); ++v)
        if (!seen[v]) throw std::invalid_argument("traversal_walk: vertex set disconnected");

    // iterative Euler tour
    std::vector<Vertex> walk{view.global(r)};
    struct Frame {
        std::uint32_t v;
        std::size_t child = 0;
    };
    std::vector<Frame> stack{{r}};
    while (!stack.empty()) {
        auto& fr = stack.back();
        if (fr.child < children[fr.v].size()) {
            auto u = children[fr.v][fr.child++];
            walk.push_back(view.global(u));
            stack.push_back({u});
        } else {
            stack.pop_back();
            if (!stack.empty()) walk.push_back(view.global(stack.back().v));
        }
    }
    return walk;
}

FamilyMember make_member(const Graph& g, std::vector<Vertex> verts, std::vector<Vertex> stem,
                         Vertex root, const RulingParams& params) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<long>(verts.size()) > params.k)
        throw std::invalid_argument("family member exceeds k vertices");
    for (Vertex s : stem)
        if (!std::binary_search(verts.begin(), verts.end(), s))
            throw std::invalid_argument("stem must lie inside the subgraph");
    if (static_cast<int>(stem.size()) > params.t)
        throw std::invalid_argument("stem exceeds t vertices");
    FamilyMember m;
    m.walk_full = traversal_walk(g, verts, root);           // also validates connectivity
    m.walk_stem = traversal_walk(g, stem, root);
    m.orchid = make_orchid(g, root, stem, params.t, params.d);
    m.sub = Subgraph{&g, std::move(verts)};
    return m;
}

// ---- Virtual graphs -----------------------------------------------------------

namespace {

// Deterministic virtual vertex IDs: rank of (root ID, member index).
std::vector<NodeId> virtual_ids(const Graph& g, const std::vector<FamilyMember>& members,
                                const std::vector<std::size_t>& alive) {
    std::vector<std::pair<NodeId, std::size_t>> keys;
    keys.reserve(alive.size());
    for (std::size_t i : alive) keys.emplace_back(g.id(members[i].orchid.root), i);
    std::vector<std::pair<std::pair<NodeId, std::size_t>, std::size_t>> order;
    for (std::size_t pos = 0; pos < keys.size(); ++pos) order.push_back({keys[pos], pos});
    std::sort(order.begin(), order.end());
    std::vector<NodeId> ids(alive.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) ids[order[rank].second] = rank;
    return ids;
}

VirtualGraph build_virtual(const FamilyState& st, const std::vector<std::size_t>& alive,
                           std::vector<std::pair<Vertex, Vertex>> edges, bool directed,
                           long dilation) {
    std::vector<Vertex> reps;
    reps.reserve(alive.size());
    for (std::size_t i : alive) reps.push_back(st.members()[i].orchid.root);
    return VirtualGraph(alive.size(), std::move(edges), directed, std::max<long>(dilation, 1),
                        std::move(reps), virtual_ids(st.graph(), st.members(), alive));
}

}  // namespace

VirtualGraph conflict_graph(const FamilyState& st, int d, std::vector<std::size_t>* index_map) {
    auto alive = st.alive_indices();
    if (index_map) *index_map = alive;
    const Graph& g = st.graph();
    std::vector<std::size_t> pos(st.members().size(), kNoMember);
    for (std::size_t p = 0; p < alive.size(); ++p) pos[alive[p]] = p;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t p = 0; p < alive.size(); ++p) {
        const auto& halo = st.members()[alive[p]].orchid.halo;
        auto dist = bfs_distances(g, halo, d);
        std::set<std::size_t> near;
        for (Vertex v = 0; v < g.size(); ++v)
            if (dist[v] <= d)
                for (std::size_t j : st.halos_at(v)) near.insert(j);
        for (std::size_t j : near)
            if (pos[j] != kNoMember && pos[j] > p)
                edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(pos[j]));
    }
    const auto& pr = st.params();
    return build_virtual(st, alive, std::move(edges), false, 2L * pr.t + 3L * pr.d);
}

VirtualGraph contention_digraph(const FamilyState& st, std::vector<std::size_t>* index_map) {
    auto alive = st.alive_indices();
    if (index_map) *index_map = alive;
    std::vector<std::size_t> pos(st.members().size(), kNoMember);
    for (std::size_t p = 0; p < alive.size(); ++p) pos[alive[p]] = p;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t p = 0; p < alive.size(); ++p) {
        std::set<std::size_t> hit;
        for (Vertex v : st.members()[alive[p]].sub.verts)
            for (std::size_t j : st.halos_at(v))
                if (j != alive[p]) hit.insert(j);
        for (std::size_t j : hit)
            if (pos[j] != kNoMember)
                edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(pos[j]));
    }
    const auto& pr = st.params();
    return build_virtual(st, alive, std::move(edges), true, pr.k + pr.t + pr.d);
}

VirtualGraph sibling_graph(const FamilyState& st, long x, std::vector<std::size_t>* index_map) {
    auto alive = st.alive_indices();
    if (index_map) *index_map = alive;
    const Graph& g = st.graph();
    std::vector<std::size_t> pos(st.members().size(), kNoMember);
    for (std::size_t p = 0; p < alive.size(); ++p) pos[alive[p]] = p;

    std::set<std::pair<Vertex, Vertex>> edge_set;
    for (std::size_t h : alive) {
        const auto& verts = st.members()[h].sub.verts;
        InducedView view(g, verts);
        // members whose orchids intersect this subgraph, with intersection sets
        std::map<std::size_t, std::vector<std::uint32_t>> inter;
        for (std::uint32_t lv = 0; lv < view.size(); ++lv)
            for (std::size_t j : st.halos_at(view.global(lv))) inter[j].push_back(lv);
        for (auto& [j1, srcs] : inter) {
            // BFS inside the subgraph from the intersection with F(j1)
            std::vector<int> dist(view.size(), kInfDist);
            std::deque<std::uint32_t> q;
            for (auto s : srcs) {
                dist[s] = 0;
                q.push_back(s);
            }
            while (!q.empty()) {
                auto v = q.front();
                q.pop_front();
                if (dist[v] >= x) continue;
                for (auto u : view.neighbors(v))
                    if (dist[u] == kInfDist) {
                        dist[u] = dist[v] + 1;
                        q.push_back(u);
                    }
            }
            for (std::uint32_t lv = 0; lv < view.size(); ++lv) {
                if (dist[lv] > x) continue;
                for (std::size_t j2 : st.halos_at(view.global(lv))) {
                    if (j2 == j1) continue;
                    Vertex a = static_cast<Vertex>(pos[j1]);
                    Vertex b = static_cast<Vertex>(pos[j2]);
                    edge_set.insert({std::min(a, b), std::max(a, b)});
                }
            }
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges(edge_set.begin(), edge_set.end());
    const auto& pr = st.params();
    return build_virtual(st, alive, std::move(edges), false, x + 2L * pr.d + 2L * pr.t);
}

std::vector<Vertex> branch_nodes(const Graph& g, const Orchid& orchid,
                                 std::span<const Vertex> stem_walk, int t, long x) {
    (void)g;
    (void)orchid;
    if (x < 1) throw std::invalid_argument("branch_nodes: x must be >= 1");
    auto pos_at = [&stem_walk](long idx) {
        if (idx < static_cast<long>(stem_walk.size())) return stem_walk[idx];
        return stem_walk.back();
    };
    std::vector<Vertex> out;
    for (long j = 0; j < x; ++j) {
        long idx = std::min<long>(2L * t, ceil_div(t, x) + j * ceil_div(2L * t, x));
        out.push_back(pos_at(idx));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- Token walks ----------------------------------------------------------------

namespace {

struct Token {
    std::uint32_t member;
    NodeId root_id;
    std::uint32_t walk_idx = 0;
    std::vector<Vertex> pending;  // forced positions (detours + pauses)
    std::uint32_t pending_pos = 0;
    std::vector<std::uint32_t> seen;  // members whose orchid already triggered a detour
    bool sigma_arrival = false;
    long finish_round = -1;

    bool pending_empty() const { return pending_pos >= pending.size(); }
};

struct WalkNode {
    std::vector<Token> tokens;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> elims;  // victim, winner
};

enum class DetourKind { none, stem, branch };

struct WalkPhase {
    FamilyState* st;
    const std::vector<std::vector<Vertex>>* scripts;  // per member
    DetourKind detour = DetourKind::none;
    long pause_len = 0;
    const std::vector<std::vector<Vertex>>* branch_sets = nullptr;  // branch mode
    int forced_rounds = 0;
    long budget = -1;
    std::string phase_name;

    // lazily built: per member, parents of a BFS from the detour target set
    mutable std::map<std::size_t, std::pair<std::vector<int>, std::vector<Vertex>>> target_bfs;

    std::span<const Vertex> detour_targets(std::size_t member) const {
        const auto& m = st->members()[member];
        if (detour == DetourKind::branch) return (*branch_sets)[member];
        return m.orchid.stem;
    }

    int detour_depth(std::size_t /*member*/) const {
        const auto& pr = st->params();
        if (detour == DetourKind::branch)
            return pr.d + static_cast<int>(ceil_div(pr.t, std::max<long>(1, branch_x))) ;
        return pr.d;
    }
    long branch_x = 1;

    // path from u to the nearest detour target of `member` (excluding u itself)
    std::vector<Vertex> path_to_target(Vertex u, std::size_t member) const {
        auto it = target_bfs.find(member);
        if (it == target_bfs.end()) {
            const Graph& g = st->graph();
            auto targets = detour_targets(member);
            std::vector<int> dist(g.size(), kInfDist);
            std::vector<Vertex> parent(g.size(), kNoVertex);
            std::deque<Vertex> q;
            for (Vertex s : targets) {
                dist[s] = 0;
                q.push_back(s);
            }
            int cap = detour_depth(member);
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop_front();
                if (dist[v] >= cap) continue;
                for (Vertex w : g.neighbors(v))
                    if (dist[w] == kInfDist) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        q.push_back(w);
                    }
            }
            it = target_bfs.emplace(member, std::make_pair(std::move(dist), std::move(parent))).first;
        }
        const auto& [dist, parent] = it->second;
        if (dist[u] == kInfDist)
            throw std::logic_error(phase_name + ": orchid entry node cannot reach detour target");
        std::vector<Vertex> path;
        Vertex cur = u;
        while (dist[cur] != 0) {
            cur = parent[cur];
            path.push_back(cur);
        }
        return path;  // u excluded; last element is the target
    }
};

struct WalkResult {
    long native_rounds = 0;
    long t_max_finish = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> eliminations;  // victim, winner
    std::vector<char> survived;  // per member
};

// Keeps the highest (root ID, member index) token; returns losers.
void resolve_collisions(std::vector<Token>& tokens,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>>& elims) {
    if (tokens.size() <= 1) return;
    auto best = std::max_element(tokens.begin(), tokens.end(), [](const Token& a, const Token& b) {
        return std::make_pair(a.root_id, a.member) < std::make_pair(b.root_id, b.member);
    });
    Token winner = *best;
    for (const auto& tk : tokens)
        if (tk.member != winner.member) elims.emplace_back(tk.member, winner.member);
    tokens.clear();
    tokens.push_back(std::move(winner));
}

WalkResult run_walk(WalkPhase& phase, RoundLedger& ledger) {
    FamilyState& st = *phase.st;
    const Graph& g = st.graph();
    auto alive = st.alive_indices();

    std::vector<WalkNode> init(g.size());
    for (std::size_t i : alive) {
        Token tk;
        tk.member = static_cast<std::uint32_t>(i);
        tk.root_id = g.id(st.members()[i].orchid.root);
        init[(*phase.scripts)[i].front()].tokens.push_back(std::move(tk));
    }
    // initial collisions: resolved before any step (a local 0-round operation)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> initial_elims;
    for (auto& node : init) resolve_collisions(node.tokens, initial_elims);
    // tokens whose whole walk is a single node are done from the start
    for (auto& node : init)
        for (auto& tk : node.tokens)
            if ((*phase.scripts)[tk.member].size() <= 1) tk.finish_round = 0;

    auto is_done = [&phase](const Token& tk) {
        return tk.pending_empty() && tk.walk_idx + 1 >= (*phase.scripts)[tk.member].size();
    };

    SuperstepProgram<WalkNode, Token> prog;
    prog.forced_rounds = phase.forced_rounds;
    prog.halted = [&is_done](Vertex, const WalkNode& node, int) {
        for (const auto& tk : node.tokens)
            if (!is_done(tk)) return false;
        return true;
    };
    prog.send = [&phase, &is_done](Vertex v, const WalkNode& node, int, Outbox<Token>& out) {
        for (const auto& tk : node.tokens) {
            Token copy = tk;
            Vertex next = v;
            if (is_done(copy)) {
                copy.sigma_arrival = false;
            } else if (!copy.pending_empty()) {
                next = copy.pending[copy.pending_pos++];
                copy.sigma_arrival = false;
                if (copy.pending_empty()) {
                    copy.pending.clear();
                    copy.pending_pos = 0;
                }
            } else {
                ++copy.walk_idx;
                next = (*phase.scripts)[copy.member][copy.walk_idx];
                copy.sigma_arrival = true;
            }
            out.send(next, std::move(copy));
        }
    };
    prog.receive = [&phase, &is_done](Vertex v, WalkNode& node,
                                      std::span<const Envelope<Token>> inbox, int round) {
        node.tokens.clear();
        for (const auto& env : inbox) node.tokens.push_back(env.payload);
        resolve_collisions(node.tokens, node.elims);
        for (auto& tk : node.tokens) {
            if (tk.sigma_arrival && phase.detour != DetourKind::none) {
                // orchids entered for the first time on this walk step
                std::vector<std::size_t> entered;
                for (std::size_t j : phase.st->halos_at(v)) {
                    if (j == tk.member) continue;
                    if (std::binary_search(tk.seen.begin(), tk.seen.end(),
                                           static_cast<std::uint32_t>(j)))
                        continue;
                    entered.push_back(j);
                }
                std::sort(entered.begin(), entered.end(), [&phase](std::size_t a, std::size_t b) {
                    const auto& ms = phase.st->members();
                    const Graph& g2 = phase.st->graph();
                    return std::make_pair(g2.id(ms[a].orchid.root), a) <
                           std::make_pair(g2.id(ms[b].orchid.root), b);
                });
                for (std::size_t j : entered) {
                    auto fwd = phase.path_to_target(v, j);
                    for (Vertex p : fwd) tk.pending.push_back(p);
                    if (phase.detour == DetourKind::branch && !fwd.empty())
                        for (int rep = 0; rep < phase.pause_len; ++rep)
                            tk.pending.push_back(fwd.back());
                    for (std::size_t r2 = fwd.size(); r2-- > 1;) tk.pending.push_back(fwd[r2 - 1]);
                    if (!fwd.empty()) tk.pending.push_back(v);
                    tk.seen.insert(std::lower_bound(tk.seen.begin(), tk.seen.end(),
                                                    static_cast<std::uint32_t>(j)),
                                   static_cast<std::uint32_t>(j));
                }
            }
            if (tk.finish_round < 0 && is_done(tk)) tk.finish_round = round;
        }
    };

    auto states = run_superstep(g, std::move(init), prog, ledger, phase.phase_name);

    WalkResult res;
    res.native_rounds = ledger.entries().back().native_rounds;
    res.eliminations = std::move(initial_elims);
    res.survived.assign(st.members().size(), 0);
    for (Vertex v = 0; v < states.size(); ++v) {
        for (auto& e : states[v].elims) res.eliminations.push_back(e);
        for (auto& tk : states[v].tokens) {
            res.survived[tk.member] = 1;
            long finish = std::max<long>(tk.finish_round, 0);
            res.t_max_finish = std::max(res.t_max_finish, finish);
            if (phase.budget >= 0 && finish > phase.budget)
                throw std::logic_error(phase.phase_name + ": token exceeded its step budget");
        }
    }
    return res;
}

// Applies walk eliminations: resolves each victim's eliminator chain to a
// member that survived the stage and records the elimination.
void apply_walk_elims(FamilyState& st, const WalkResult& res, int stage_idx,
                      StageSnapshot& snap) {
    std::map<std::uint32_t, std::uint32_t> killed_by;
    for (auto& [victim, winner] : res.eliminations) killed_by[victim] = winner;
    const Graph& g = st.graph();
    for (auto& [victim, winner] : res.eliminations) {
        std::uint32_t target = winner;
        while (!res.survived[target]) target = killed_by.at(target);
        st.eliminate(victim, target, stage_idx);
        auto d = set_distance(g, st.members()[victim].sub.verts, st.members()[target].sub.verts);
        if (!d) throw std::logic_error("walk elimination across components");
        snap.max_elim_hop = std::max<long>(snap.max_elim_hop, *d);
    }
}

// Shared tail for the ruling-set stages: eliminates non-selected members,
// resolving dominator chains over the virtual graph.
void apply_selection(FamilyState& st, const std::vector<std::size_t>& vmap,
                     const std::vector<char>& selected, const std::vector<Vertex>& dominator,
                     int stage_idx, StageSnapshot& snap) {
    const Graph& g = st.graph();
    for (Vertex u = 0; u < vmap.size(); ++u) {
        if (selected[u]) continue;
        Vertex cur = u;
        int guard = 0;
        while (!selected[cur]) {
            if (dominator[cur] == kNoVertex || ++guard > static_cast<int>(vmap.size()))
                throw std::logic_error("selection stage: unresolved dominator chain");
            cur = dominator[cur];
        }
        st.eliminate(vmap[u], vmap[cur], stage_idx);
        auto d = set_distance(g, st.members()[vmap[u]].sub.verts, st.members()[vmap[cur]].sub.verts);
        if (!d) throw std::logic_error("selection elimination across components");
        snap.max_elim_hop = std::max<long>(snap.max_elim_hop, *d);
    }
}

void fill_contention_stats(const FamilyState& st, StageSnapshot& snap) {
    auto cd = contention_digraph(st);
    snap.contention_max_out = cd.max_outdegree();
    snap.contention_max_in = cd.max_indegree();
}

}  // namespace

// ---- Stages -------------------------------------------------------------------

void elimination_walk(FamilyState& st, RoundLedger& ledger) {
    const auto& pr = st.params();
    std::vector<std::vector<Vertex>> scripts;
    scripts.reserve(st.members().size());
    for (const auto& m : st.members()) scripts.push_back(m.walk_stem);

    WalkPhase phase;
    phase.st = &st;
    phase.scripts = &scripts;
    phase.detour = DetourKind::none;
    phase.forced_rounds = 2 * pr.t;
    phase.budget = 2L * pr.t;
    phase.phase_name = "elimination_walk";

    auto res = run_walk(phase, ledger);

    StageSnapshot snap;
    snap.stage = "elimination_walk";
    snap.native_rounds = res.native_rounds;
    snap.t_max_finish = res.t_max_finish;
    snap.token_budget = phase.budget;
    int stage_idx = static_cast<int>(st.snapshots().size());
    apply_walk_elims(st, res, stage_idx, snap);
    snap.alive_count = st.alive_indices().size();
    snap.conflict_max_degree = conflict_graph(st, pr.d).max_undirected_degree();
    st.snapshots().push_back(std::move(snap));
}

void ruling_orchids(FamilyState& st, RoundLedger& ledger) {
    const auto& pr = st.params();
    std::vector<std::size_t> vmap;
    auto cg = conflict_graph(st, pr.d, &vmap);

    StageSnapshot snap;
    snap.stage = "ruling_orchids";
    snap.conflict_max_degree = cg.max_undirected_degree();

    RulingSetResult rs;
    if (pr.randomized) {
        rs = randomized_ruling_set(cg, pr.seed,
                                   virtual_charger(ledger, "ruling_orchids", cg.dilation()));
    } else {
        auto col = linial_coloring(cg, virtual_charger(ledger, "ruling_orchids.linial", cg.dilation()));
        int c = std::max(1, static_cast<int>(std::ceil(
                                log2_clamped(std::max(2.0, double(cg.max_undirected_degree()))))));
        rs = ruling_set_from_coloring(cg, col, c,
                                      virtual_charger(ledger, "ruling_orchids.rs", cg.dilation()));
    }
    std::vector<char> selected(vmap.size(), 0);
    for (Vertex u : rs.members) selected[u] = 1;

    int stage_idx = static_cast<int>(st.snapshots().size());
    apply_selection(st, vmap, selected, rs.dominator, stage_idx, snap);
    snap.alive_count = st.alive_indices().size();
    snap.post_conflict_edges = static_cast<long>(conflict_graph(st, pr.d).undirected_edge_count());
    fill_contention_stats(st, snap);
    st.snapshots().push_back(std::move(snap));
}

void directional_elimination_walk(FamilyState& st, RoundLedger& ledger) {
    const auto& pr = st.params();
    std::vector<std::vector<Vertex>> scripts;
    scripts.reserve(st.members().size());
    for (const auto& m : st.members()) scripts.push_back(m.walk_full);

    WalkPhase phase;
    phase.st = &st;
    phase.scripts = &scripts;
    phase.detour = DetourKind::stem;
    phase.budget = 6L * pr.k;
    phase.phase_name = "directional_elimination_walk";

    auto res = run_walk(phase, ledger);

    StageSnapshot snap;
    snap.stage = "directional_elimination_walk";
    snap.native_rounds = res.native_rounds;
    snap.t_max_finish = res.t_max_finish;
    snap.token_budget = phase.budget;
    int stage_idx = static_cast<int>(st.snapshots().size());
    apply_walk_elims(st, res, stage_idx, snap);
    snap.alive_count = st.alive_indices().size();
    fill_contention_stats(st, snap);
    st.snapshots().push_back(std::move(snap));
}

void outdegree_reduction(FamilyState& st, int iter, RoundLedger& ledger) {
    const auto& pr = st.params();
    double li = iter_log(double(pr.k), iter);
    long x = ceil_div(4L * pr.k, std::max<long>(1, static_cast<long>(li * li)));

    std::vector<std::size_t> vmap;
    auto sg = sibling_graph(st, x, &vmap);

    std::string phase = "outdegree_reduction_" + std::to_string(iter);
    auto col = linial_coloring(sg, virtual_charger(ledger, phase + ".linial", sg.dilation()));
    int c = std::max(1, static_cast<int>(std::ceil(
                            log2_clamped(std::max(2.0, double(sg.max_undirected_degree()))))));
    auto rs = ruling_set_from_coloring(sg, col, c,
                                       virtual_charger(ledger, phase + ".rs", sg.dilation()));
    std::vector<char> selected(vmap.size(), 0);
    for (Vertex u : rs.members) selected[u] = 1;

    StageSnapshot snap;
    snap.stage = "outdegree_reduction";
    snap.iter = iter;
    snap.connect_x = x;
    int stage_idx = static_cast<int>(st.snapshots().size());
    apply_selection(st, vmap, selected, rs.dominator, stage_idx, snap);
    snap.alive_count = st.alive_indices().size();
    fill_contention_stats(st, snap);
    st.snapshots().push_back(std::move(snap));
}

void pausing_elimination_walk(FamilyState& st, int iter, RoundLedger& ledger) {
    const auto& pr = st.params();
    long outdeg = contention_digraph(st).max_outdegree();
    long p = 2 * outdeg;
    long ell = p > 0 ? ceil_div(4L * pr.k, p) : 0;

    std::vector<std::vector<Vertex>> scripts;
    std::vector<std::vector<Vertex>> branches(st.members().size());
    scripts.reserve(st.members().size());
    for (std::size_t i = 0; i < st.members().size(); ++i) {
        const auto& m = st.members()[i];
        scripts.push_back(m.walk_full);
        if (m.alive && p > 0)
            branches[i] = branch_nodes(st.graph(), m.orchid, m.walk_stem, pr.t, p);
    }

    WalkPhase phase;
    phase.st = &st;
    phase.scripts = &scripts;
    phase.detour = p > 0 ? DetourKind::branch : DetourKind::none;
    phase.pause_len = ell;
    phase.branch_sets = &branches;
    phase.branch_x = std::max<long>(p, 1);
    phase.budget = 2L * pr.k +
                   (p / 2) * (ell + 2L * (pr.d + ceil_div(pr.t, std::max<long>(p, 1))));
    phase.phase_name = "pausing_elimination_walk_" + std::to_string(iter);

    auto res = run_walk(phase, ledger);

    StageSnapshot snap;
    snap.stage = "pausing_elimination_walk";
    snap.iter = iter;
    snap.p = p;
    snap.ell = ell;
    snap.native_rounds = res.native_rounds;
    snap.t_max_finish = res.t_max_finish;
    snap.token_budget = phase.budget;
    int stage_idx = static_cast<int>(st.snapshots().size());
    apply_walk_elims(st, res, stage_idx, snap);
    snap.alive_count = st.alive_indices().size();
    fill_contention_stats(st, snap);
    st.snapshots().push_back(std::move(snap));
}

// ---- Orchestration ----------------------------------------------------------------

RulingOutcome ruling_subgraphs(FamilyState& st, RoundLedger& ledger) {
    const auto& pr = st.params();
    const Graph& g = st.graph();

    if (!st.members().empty()) {
        elimination_walk(st, ledger);
        ruling_orchids(st, ledger);

        bool early_exit = pr.d > 0 && 2.0 * double(pr.k) / double(pr.d) < 1.0;
        if (!early_exit) {
            directional_elimination_walk(st, ledger);

            const double threshold = std::max<double>(log_star(double(g.size())), 16.0);
            for (int iter = 1; iter <= 64; ++iter) {
                double li = iter_log(double(pr.k), iter);
                if (li * li * li * li <= threshold) break;
                outdegree_reduction(st, iter, ledger);
                pausing_elimination_walk(st, iter, ledger);
            }

            // final MIS on the contention digraph, orientation ignored
            std::vector<std::size_t> vmap;
            auto cd = contention_digraph(st, &vmap);
            auto col = linial_coloring(cd, virtual_charger(ledger, "final_mis.linial", cd.dilation()));
            auto mis = mis_from_coloring(cd, col, virtual_charger(ledger, "final_mis", cd.dilation()));
            std::vector<char> selected(vmap.size(), 0);
            for (Vertex u : mis) selected[u] = 1;
            // dominator: smallest-ID adjacent MIS member
            std::vector<Vertex> dominator(vmap.size(), kNoVertex);
            for (Vertex u = 0; u < vmap.size(); ++u) {
                if (selected[u]) continue;
                for (Vertex w : cd.neighbors(u))
                    if (selected[w] &&
                        (dominator[u] == kNoVertex || cd.vertex_id(w) < cd.vertex_id(dominator[u])))
                        dominator[u] = w;
                if (dominator[u] == kNoVertex)
                    throw std::logic_error("final MIS: non-member without adjacent member");
            }
            StageSnapshot snap;
            snap.stage = "final_mis";
            int stage_idx = static_cast<int>(st.snapshots().size());
            apply_selection(st, vmap, selected, dominator, stage_idx, snap);
            snap.alive_count = st.alive_indices().size();
            fill_contention_stats(st, snap);
            st.snapshots().push_back(std::move(snap));
        }
    }

    RulingOutcome out;
    out.survivors = st.alive_indices();
    out.snapshots = st.snapshots();
    for (const auto& snap : out.snapshots) out.chain_bound += snap.max_elim_hop;

    // survivors' contention digraph must be edgeless
    if (contention_digraph(st).edges().size() != 0)
        throw std::logic_error("ruling_subgraphs: output contention digraph not empty");

    // measured coverage radius: multi-source BFS from all surviving vertices
    out.final_target.assign(st.members().size(), kNoMember);
    if (!out.survivors.empty()) {
        std::vector<Vertex> survivor_verts;
        for (std::size_t i : out.survivors)
            survivor_verts.insert(survivor_verts.end(), st.members()[i].sub.verts.begin(),
                                  st.members()[i].sub.verts.end());
        auto dist = bfs_distances(g, survivor_verts);
        for (std::size_t i = 0; i < st.members().size(); ++i) {
            const auto& m = st.members()[i];
            if (m.alive) {
                out.final_target[i] = i;
                continue;
            }
            std::size_t target = m.elim_target;
            while (!st.members()[target].alive) target = st.members()[target].elim_target;
            out.final_target[i] = target;
            int best = kInfDist;
            for (Vertex v : m.sub.verts) best = std::min(best, dist[v]);
            if (best == kInfDist)
                throw std::logic_error("ruling_subgraphs: eliminated member unreachable");
            out.coverage_radius = std::max<long>(out.coverage_radius, best);
        }
    }
    return out;
}

}  // namespace deltacolor
