#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltacolor/graph.hpp"
#include "deltacolor/ledger.hpp"

namespace deltacolor {

// Communication topology a superstep program runs on: the host graph or a
// virtual graph over a subgraph family.
class Topology {
public:
    virtual ~Topology() = default;
    virtual std::size_t size() const = 0;
    virtual std::span<const Vertex> neighbors(Vertex v) const = 0;
    virtual NodeId vertex_id(Vertex v) const = 0;
};

class GraphTopology final : public Topology {
public:
    explicit GraphTopology(const Graph& g) : g_(g) {}
    std::size_t size() const override { return g_.size(); }
    std::span<const Vertex> neighbors(Vertex v) const override { return g_.neighbors(v); }
    NodeId vertex_id(Vertex v) const override { return g_.id(v); }

private:
    const Graph& g_;
};

// Virtual graph over subgraph identifiers. One virtual round is simulated by
// `dilation` rounds of the host graph; charged accordingly. Directed edges
// are kept for degree bookkeeping, while programs communicate over the
// undirected view.
class VirtualGraph final : public Topology {
public:
    VirtualGraph() = default;
    VirtualGraph(std::size_t num_vertices, std::vector<std::pair<Vertex, Vertex>> directed_edges,
                 bool directed, long dilation, std::vector<Vertex> representative,
                 std::vector<NodeId> ids);

    std::size_t size() const override { return n_; }
    std::span<const Vertex> neighbors(Vertex v) const override {
        return {undirected_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    NodeId vertex_id(Vertex v) const override { return ids_[v]; }

    long dilation() const { return dilation_; }
    bool directed() const { return directed_; }
    Vertex representative(Vertex v) const { return rep_[v]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    std::size_t undirected_edge_count() const;
    int max_undirected_degree() const;
    int max_outdegree() const;
    int max_indegree() const;
    std::span<const Vertex> out_neighbors(Vertex v) const {
        return {out_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
    }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    bool directed_ = false;
    long dilation_ = 1;
    std::vector<Vertex> rep_;
    std::vector<NodeId> ids_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> undirected_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Vertex> out_;
};

// ---- Superstep engine --------------------------------------------------------

// One LOCAL round: every node sends messages to neighbors based on its state,
// then consumes the messages addressed to it (sorted by sender ID) and updates
// its state. The send callback must not mutate state; the receive callback
// touches only the node's own state. Identical inputs yield identical outputs
// regardless of evaluation order.
template <typename Msg>
struct Envelope {
    NodeId from_id;
    Vertex from;
    Msg payload;
};

template <typename Msg>
class Outbox {
public:
    void send(Vertex to, Msg m) { items_.emplace_back(to, std::move(m)); }
    std::vector<std::pair<Vertex, Msg>>& items() { return items_; }

private:
    std::vector<std::pair<Vertex, Msg>> items_;
};

template <typename State, typename Msg>
struct SuperstepProgram {
    // send(v, state, round, outbox); round counts from 1
    std::function<void(Vertex, const State&, int, Outbox<Msg>&)> send;
    // receive(v, state, inbox, round)
    std::function<void(Vertex, State&, std::span<const Envelope<Msg>>, int)> receive;
    // halting predicate, checked before each round
    std::function<bool(Vertex, const State&, int)> halted;
    // run at least this many rounds even if all nodes report halted early
    // (fixed-length loops in the token walks)
    int forced_rounds = 0;
};

inline long engine_round_cap() {
    if (const char* env = std::getenv("RULING_COLOR_ROUND_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return round_cap_default();
}

struct SuperstepStats {
    long rounds = 0;
};

// Core loop shared by host-graph and virtual-graph execution.
template <typename State, typename Msg>
SuperstepStats run_program(const Topology& topo, std::vector<State>& states,
                           const SuperstepProgram<State, Msg>& prog,
                           const std::string& phase) {
    const std::size_t n = topo.size();
    if (states.size() != n) throw std::invalid_argument("run_program: state size mismatch");
    const long cap = engine_round_cap();
    std::vector<std::vector<Envelope<Msg>>> inbox(n);
    long round = 1;
    for (;; ++round) {
        if (round > cap) throw RoundCapExceeded(phase);
        bool all_halted = true;
        for (Vertex v = 0; v < n && all_halted; ++v)
            if (!prog.halted(v, states[v], static_cast<int>(round))) all_halted = false;
        if (all_halted && round > prog.forced_rounds) break;

        for (auto& box : inbox) box.clear();
        Outbox<Msg> out;
        for (Vertex v = 0; v < n; ++v) {
            out.items().clear();
            prog.send(v, states[v], static_cast<int>(round), out);
            for (auto& [to, msg] : out.items())
                inbox[to].push_back({topo.vertex_id(v), v, std::move(msg)});
        }
        for (Vertex v = 0; v < n; ++v) {
            auto& box = inbox[v];
            std::stable_sort(box.begin(), box.end(),
                             [](const auto& a, const auto& b) { return a.from_id < b.from_id; });
            prog.receive(v, states[v], std::span<const Envelope<Msg>>(box), static_cast<int>(round));
        }
    }
    return {round - 1};
}

// Runs a program on the host graph; the ledger gains one superstep entry with
// native_rounds = number of supersteps executed.
template <typename State, typename Msg>
std::vector<State> run_superstep(const Graph& g, std::vector<State> states,
                                 const SuperstepProgram<State, Msg>& prog,
                                 RoundLedger& ledger, const std::string& phase) {
    GraphTopology topo(g);
    auto stats = run_program(topo, states, prog, phase);
    ledger.add_superstep(phase, stats.rounds);
    return states;
}

// Runs a program on a virtual graph; charged = native * dilation.
template <typename State, typename Msg>
std::vector<State> run_on_virtual(const VirtualGraph& vg, std::vector<State> states,
                                  const SuperstepProgram<State, Msg>& prog,
                                  RoundLedger& ledger, const std::string& phase) {
    auto stats = run_program(vg, states, prog, phase);
    ledger.add_virtual(phase, stats.rounds, vg.dilation());
    return states;
}

// A radius-r neighborhood collection costs r rounds.
inline void charge_ball(RoundLedger& ledger, const std::string& phase, long radius) {
    if (radius < 0) throw std::invalid_argument("charge_ball: negative radius");
    ledger.add_ball(phase, radius);
}

}  // namespace deltacolor
