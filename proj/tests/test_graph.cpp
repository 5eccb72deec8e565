#include <doctest.h>

#include <sstream>

#include "deltacolor/graph.hpp"
#include "deltacolor/verify.hpp"

using namespace deltacolor;

namespace {

Graph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

std::vector<Vertex> all_verts(const Graph& g) {
    std::vector<Vertex> v(g.size());
    for (Vertex i = 0; i < g.size(); ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("load_graph parses the edge-list format") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    auto g = Graph::load(in);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("load_graph handles comments, isolated vertices, explicit ids") {
    SUBCASE("isolated vertex") {
        std::istringstream in("# a graph\n1 0\n");
        auto g = Graph::load(in);
        CHECK(g.size() == 1);
        CHECK(g.degree(0) == 0);
    }
    SUBCASE("arbitrary 64-bit ids") {
        std::istringstream in("3 2\n100 200\n200 4000000000000\n");
        auto g = Graph::load(in);
        CHECK(g.size() == 3);
        CHECK(g.vertex_of(4000000000000ULL) != kNoVertex);
        CHECK(g.max_degree() == 2);
    }
}

TEST_CASE("load_graph rejects malformed input") {
    SUBCASE("duplicate edge") {
        std::istringstream in("3 3\n0 1\n1 2\n0 1\n");
        CHECK_THROWS_WITH_AS(Graph::load(in), doctest::Contains("duplicate"), std::runtime_error);
    }
    SUBCASE("self loop") {
        std::istringstream in("2 1\n1 1\n");
        CHECK_THROWS(Graph::load(in));
    }
    SUBCASE("edge count mismatch") {
        std::istringstream in("3 5\n0 1\n");
        CHECK_THROWS(Graph::load(in));
    }
}

TEST_CASE("save/load round trip") {
    auto g = cycle_graph(7);
    std::ostringstream out;
    g.save(out);
    std::istringstream in(out.str());
    auto g2 = Graph::load(in);
    REQUIRE(g2.size() == g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        CHECK(std::vector<Vertex>(g2.neighbors(v).begin(), g2.neighbors(v).end()) ==
              std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
}

TEST_CASE("set_distance basics") {
    auto g = path_graph(3);
    Vertex a0[] = {0}, a2[] = {2};
    CHECK(set_distance(g, a0, a2) == 2);
    Vertex both[] = {0, 1};
    CHECK(set_distance(g, both, both) == 0);

    // disjoint components -> infinity
    auto g2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Vertex left[] = {0}, right[] = {3};
    CHECK(!set_distance(g2, left, right).has_value());
}

TEST_CASE("dist symmetry and triangle inequality on random instances") {
    auto g = cycle_graph(9);
    for (Vertex a = 0; a < 9; ++a) {
        auto da = bfs_distances(g, std::span<const Vertex>(&a, 1));
        for (Vertex b = 0; b < 9; ++b) {
            auto db = bfs_distances(g, std::span<const Vertex>(&b, 1));
            CHECK(da[b] == db[a]);
            for (Vertex c = 0; c < 9; ++c) CHECK(da[c] <= da[b] + db[c]);
        }
    }
}

TEST_CASE("ball") {
    auto g = path_graph(7);
    CHECK(ball(g, 3, 0).verts == std::vector<Vertex>{3});
    CHECK(ball(g, 3, 1).verts == std::vector<Vertex>{2, 3, 4});
    CHECK(ball(g, 0, 100).verts.size() == 7);  // whole component
}

TEST_CASE("block decomposition: triangle is a single block") {
    auto g = complete_graph(3);
    auto dec = block_decomposition(g);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].size() == 3);
    CHECK(dec.cut_vertices.empty());
}

TEST_CASE("block decomposition: two triangles sharing a vertex") {
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto dec = block_decomposition(g);
    CHECK(dec.blocks.size() == 2);
    REQUIRE(dec.cut_vertices.size() == 1);
    CHECK(dec.cut_vertices[0] == 2);
}

TEST_CASE("block decomposition: every edge of a path is its own block") {
    auto g = path_graph(4);
    auto dec = block_decomposition(g);
    CHECK(dec.blocks.size() == 3);
    CHECK(dec.cut_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("block decomposition: every edge in exactly one block") {
    // chain of cliques + pendant path
    auto g = Graph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 7}});
    auto dec = block_decomposition(g);
    std::size_t edge_total = 0;
    for (const auto& blk : dec.blocks) {
        InducedView view(g, blk);
        std::size_t e = 0;
        for (std::uint32_t v = 0; v < view.size(); ++v) e += view.neighbors(v).size();
        edge_total += e / 2;
    }
    CHECK(edge_total == g.edge_count());
}

TEST_CASE("block decomposition agrees with brute-force 2-connectivity on small graphs") {
    // cut vertices = vertices whose removal disconnects their component
    for (std::size_t n = 4; n <= 6; ++n) {
        auto graphs = enumerate_connected_graphs(n, 3);
        for (const auto& g : graphs) {
            auto dec = block_decomposition(g);
            std::vector<Vertex> brute;
            for (Vertex v = 0; v < n; ++v) {
                std::vector<Vertex> rest;
                for (Vertex u = 0; u < n; ++u)
                    if (u != v) rest.push_back(u);
                InducedView view(g, rest);
                if (!view.is_connected()) brute.push_back(v);
            }
            CHECK(dec.cut_vertices == brute);
        }
    }
}

TEST_CASE("gallai tree predicate") {
    auto p4 = path_graph(4);
    CHECK(is_gallai_tree(p4, all_verts(p4)));  // trees: edge blocks are K2

    auto c5 = cycle_graph(5);
    CHECK(is_gallai_tree(c5, all_verts(c5)));  // odd cycle

    auto c4 = cycle_graph(4);
    CHECK(!is_gallai_tree(c4, all_verts(c4)));  // even cycle block

    auto k4 = complete_graph(4);
    CHECK(is_gallai_tree(k4, all_verts(k4)));  // clique

    // two triangles sharing a vertex: both blocks are cliques
    auto bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(is_gallai_tree(bowtie, all_verts(bowtie)));
}
