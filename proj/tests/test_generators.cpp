#include <doctest.h>

#include <sstream>

#include "deltacolor/generators.hpp"
#include "deltacolor/structure.hpp"

using namespace deltacolor;

TEST_CASE("random regular: degree histogram check") {
    auto g = gen_random_regular(8, 3, 1);
    CHECK(g.size() == 8);
    for (Vertex v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 3);
    CHECK(connected_components(g).size() == 1);
}

TEST_CASE("random regular: seed reproducibility and spread") {
    auto a = gen_random_regular(64, 3, 7);
    auto b = gen_random_regular(64, 3, 7);
    auto c = gen_random_regular(64, 3, 8);
    std::ostringstream sa, sb, sc;
    a.save(sa);
    b.save(sb);
    c.save(sc);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str() != sc.str());
}

TEST_CASE("random regular: infeasible parameters rejected") {
    CHECK_THROWS(gen_random_regular(7, 3, 1));  // odd n*delta
    CHECK_THROWS(gen_random_regular(3, 3, 1));  // n <= delta
}

TEST_CASE("torus grid is 4-regular") {
    auto g = gen_torus_grid(4, 4);
    CHECK(g.size() == 16);
    for (Vertex v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 4);
    CHECK_THROWS(gen_torus_grid(2, 5));
}

TEST_CASE("tree of cliques is a gallai tree") {
    auto g = gen_tree_of_cliques(4, 4);
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.size(); ++v) all.push_back(v);
    CHECK(is_gallai_tree(g, all));
    auto dec = block_decomposition(g);
    CHECK(dec.blocks.size() == 4);
    CHECK(dec.cut_vertices.size() == 3);
}

TEST_CASE("theta chain has max degree 3 and theta blocks") {
    auto g = gen_theta_chain(3, 5);
    CHECK(g.max_degree() == 3);
    CHECK(connected_components(g).size() == 1);
    // minimal LDCCs are the theta gadgets: each non-trivial block is a nice LDCC
    auto dec = block_decomposition(g);
    std::size_t thetas = 0;
    for (const auto& blk : dec.blocks)
        if (blk.size() > 2) {
            CHECK(is_nice_ldcc(g, blk));
            ++thetas;
        }
    CHECK(thetas == 3);
}

TEST_CASE("descriptor parsing") {
    auto g = gen_graph("torus_grid:rows=3,cols=5", 0);
    CHECK(g.size() == 15);
    CHECK_THROWS(gen_graph("mystery:n=4", 0));
    auto r = gen_graph("random_regular:n=16,delta=4", 3);
    CHECK(r.max_degree() == 4);
}
