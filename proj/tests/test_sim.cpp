#include <doctest.h>

#include "deltacolor/graph.hpp"
#include "deltacolor/sim.hpp"

using namespace deltacolor;

namespace {

Graph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

struct BfsState {
    int dist = -1;
    bool announced = false;
};

SuperstepProgram<BfsState, int> flood_fill(const Graph& g) {
    SuperstepProgram<BfsState, int> prog;
    prog.halted = [](Vertex, const BfsState& st, int) { return st.dist >= 0; };
    prog.send = [&g](Vertex v, const BfsState& st, int, Outbox<int>& out) {
        if (st.dist >= 0 && !st.announced)
            for (Vertex u : g.neighbors(v)) out.send(u, st.dist + 1);
    };
    prog.receive = [](Vertex, BfsState& st, std::span<const Envelope<int>> inbox, int) {
        if (st.dist >= 0) {
            st.announced = true;
            return;
        }
        for (const auto& env : inbox)
            if (st.dist < 0 || env.payload < st.dist) st.dist = env.payload;
    };
    return prog;
}

}  // namespace

TEST_CASE("immediate halt charges zero rounds") {
    auto g = path_graph(1);
    RoundLedger ledger;
    std::vector<BfsState> init{{0, false}};
    auto prog = flood_fill(g);
    run_superstep(g, init, prog, ledger, "noop");
    CHECK(ledger.entries().back().native_rounds == 0);
    CHECK(ledger.total() == 0);
}

TEST_CASE("flood fill on a path of 5 takes 4 native rounds") {
    auto g = path_graph(5);
    RoundLedger ledger;
    std::vector<BfsState> init(5);
    init[0].dist = 0;
    auto prog = flood_fill(g);
    auto fin = run_superstep(g, init, prog, ledger, "bfs");
    CHECK(ledger.entries().back().native_rounds == 4);
    for (Vertex v = 0; v < 5; ++v) CHECK(fin[v].dist == static_cast<int>(v));
}

TEST_CASE("ledger invariants") {
    RoundLedger ledger;
    ledger.add_superstep("a", 5);
    ledger.add_ball("b", 7);
    ledger.add_virtual("c", 3, 10);
    CHECK(ledger.entries()[0].charged_rounds == 5);
    CHECK(ledger.entries()[1].charged_rounds == 7);
    CHECK(ledger.entries()[2].charged_rounds == 30);  // product rule
    CHECK(ledger.total() == 42);
    for (const auto& e : ledger.entries()) {
        CHECK(e.charged_rounds == e.native_rounds * e.dilation);
        if (e.mode != ChargeMode::virtual_graph) CHECK(e.dilation == 1);
    }
    CHECK_THROWS(ledger.add_superstep("bad", -1));
}

TEST_CASE("ledger csv") {
    RoundLedger ledger;
    ledger.add_virtual("phase_x", 3, 7);
    auto csv = ledger.to_csv();
    CHECK(csv == "phase,mode,native_rounds,dilation,charged_rounds\nphase_x,virtual,3,7,21\n");
}

TEST_CASE("virtual graph charging and degree bookkeeping") {
    // directed edges 0->1, 1->0, 2->1
    VirtualGraph vg(3, {{0, 1}, {1, 0}, {2, 1}}, true, 10, {0, 1, 2}, {0, 1, 2});
    CHECK(vg.max_outdegree() == 1);
    CHECK(vg.max_indegree() == 2);
    CHECK(vg.max_undirected_degree() == 2);
    CHECK(vg.undirected_edge_count() == 2);

    // 3 virtual rounds at dilation 10 -> 30 charged
    RoundLedger ledger;
    struct St {
        int count = 0;
    };
    SuperstepProgram<St, int> prog;
    prog.halted = [](Vertex, const St& st, int) { return st.count >= 3; };
    prog.send = [&vg](Vertex v, const St&, int, Outbox<int>& out) {
        for (Vertex u : vg.neighbors(v)) out.send(u, 1);
    };
    prog.receive = [](Vertex, St& st, std::span<const Envelope<int>>, int) { st.count++; };
    std::vector<St> init(3);
    run_on_virtual(vg, init, prog, ledger, "virt");
    CHECK(ledger.entries().back().mode == ChargeMode::virtual_graph);
    CHECK(ledger.entries().back().native_rounds == 3);
    CHECK(ledger.entries().back().charged_rounds == 30);
}

TEST_CASE("charge_ball") {
    RoundLedger ledger;
    charge_ball(ledger, "ball0", 0);
    charge_ball(ledger, "ball9", 9);
    CHECK(ledger.entries()[0].charged_rounds == 0);
    CHECK(ledger.entries()[1].charged_rounds == 9);
    CHECK_THROWS(charge_ball(ledger, "bad", -1));
}

TEST_CASE("round cap aborts with phase name") {
    auto g = path_graph(2);
    RoundLedger ledger;
    struct St {};
    SuperstepProgram<St, int> prog;
    prog.halted = [](Vertex, const St&, int) { return false; };
    prog.send = [](Vertex, const St&, int, Outbox<int>&) {};
    prog.receive = [](Vertex, St&, std::span<const Envelope<int>>, int) {};
    std::vector<St> init(2);
    setenv("RULING_COLOR_ROUND_CAP", "50", 1);
    CHECK_THROWS_WITH_AS(run_superstep(g, init, prog, ledger, "runaway"),
                         doctest::Contains("runaway"), RoundCapExceeded);
    unsetenv("RULING_COLOR_ROUND_CAP");
}

TEST_CASE("determinism: identical runs produce identical message traces") {
    auto g = path_graph(6);
    auto run_once = [&g]() {
        RoundLedger ledger;
        std::vector<BfsState> init(6);
        init[2].dist = 0;
        auto prog = flood_fill(g);
        auto fin = run_superstep(g, init, prog, ledger, "bfs");
        std::vector<int> dists;
        for (auto& st : fin) dists.push_back(st.dist);
        return std::make_pair(dists, ledger.total());
    };
    CHECK(run_once() == run_once());
}
