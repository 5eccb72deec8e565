#include "deltacolor/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "deltacolor/rng.hpp"

namespace deltacolor {

namespace {

bool pairing_attempt(std::size_t n, int degree, std::uint64_t seed,
                     std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Vertex> stubs;
    stubs.reserve(n * degree);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < degree; ++i) stubs.push_back(v);
    // Fisher-Yates with counter-based draws
    for (std::size_t i = stubs.size(); i > 1; --i) {
        std::size_t j = rng::below(seed, rng::hash_tag("pairing"), i, 0, i);
        std::swap(stubs[i - 1], stubs[j]);
    }
    edges.clear();
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex u = stubs[i], v = stubs[i + 1];
        if (u == v) return false;
        auto& row = adj[std::min(u, v)];
        if (std::find(row.begin(), row.end(), std::max(u, v)) != row.end()) return false;
        row.push_back(std::max(u, v));
        edges.emplace_back(u, v);
    }
    return true;
}

bool has_full_clique_component(const Graph& g) {
    int delta = g.max_degree();
    for (const auto& comp : connected_components(g)) {
        if (comp.size() != static_cast<std::size_t>(delta) + 1) continue;
        bool complete = true;
        for (Vertex v : comp)
            if (g.degree(v) != delta) { complete = false; break; }
        if (complete) return true;
    }
    return false;
}

bool is_connected_graph(const Graph& g) {
    return connected_components(g).size() == 1;
}

}  // namespace

Graph gen_random_regular(std::size_t n, int degree, std::uint64_t seed) {
    if (degree < 1 || n <= static_cast<std::size_t>(degree))
        throw std::invalid_argument("random_regular: need n > delta >= 1");
    if ((n * degree) % 2 != 0)
        throw std::invalid_argument("random_regular: n*delta must be even");
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int max_attempts = 20000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t sub = rng::derive(seed, rng::hash_tag("regular_attempt"), attempt, n);
        if (!pairing_attempt(n, degree, sub, edges)) continue;
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected_graph(g)) continue;
        if (has_full_clique_component(g)) continue;
        return g;
    }
    throw std::runtime_error("random_regular: no simple pairing found (params infeasible?)");
}

Graph gen_torus_grid(std::size_t rows, std::size_t cols) {
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("torus_grid: rows and cols must be >= 3");
    auto at = [cols](std::size_t r, std::size_t c) {
        return static_cast<Vertex>(r * cols + c);
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            edges.emplace_back(at(r, c), at(r, (c + 1) % cols));
            edges.emplace_back(at(r, c), at((r + 1) % rows, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

Graph gen_tree_of_cliques(std::size_t num_cliques, std::size_t clique_size) {
    if (num_cliques < 1 || clique_size < 2)
        throw std::invalid_argument("tree_of_cliques: need cliques >= 1, size >= 2");
    // Clique i spans [start_i, start_i + size); consecutive cliques share one vertex.
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t n = clique_size + (num_cliques - 1) * (clique_size - 1);
    std::size_t start = 0;
    for (std::size_t i = 0; i < num_cliques; ++i) {
        for (std::size_t a = 0; a < clique_size; ++a)
            for (std::size_t b = a + 1; b < clique_size; ++b)
                edges.emplace_back(static_cast<Vertex>(start + a), static_cast<Vertex>(start + b));
        start += clique_size - 1;
    }
    return Graph::from_edges(n, edges);
}

Graph gen_theta_chain(std::size_t blocks, std::uint64_t seed) {
    if (blocks < 1) throw std::invalid_argument("theta_chain: need blocks >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 0;
    auto fresh = [&next]() { return next++; };
    Vertex prev_exit = kNoVertex;
    for (std::size_t b = 0; b < blocks; ++b) {
        // Theta gadget: hubs x,y joined by three vertex-disjoint paths whose
        // lengths vary with the seed (at least 1,2,2 so the gadget is simple).
        Vertex x = fresh(), y = fresh();
        int lens[3];
        lens[0] = 1 + static_cast<int>(rng::below(seed, rng::hash_tag("theta_a"), b, 0, 2));
        lens[1] = 2 + static_cast<int>(rng::below(seed, rng::hash_tag("theta_b"), b, 0, 2));
        lens[2] = 2 + static_cast<int>(rng::below(seed, rng::hash_tag("theta_c"), b, 0, 3));
        // bridges attach at interior path vertices so the hubs stay degree 3
        Vertex entry_port = kNoVertex, exit_port = kNoVertex;
        for (int p = 0; p < 3; ++p) {
            Vertex cur = x;
            for (int s = 1; s < lens[p]; ++s) {
                Vertex w = fresh();
                edges.emplace_back(cur, w);
                cur = w;
                if (p == 1 && entry_port == kNoVertex) entry_port = w;
                if (p == 2 && exit_port == kNoVertex) exit_port = w;
            }
            edges.emplace_back(cur, y);
        }
        if (prev_exit != kNoVertex) {
            // bridge path of length 2 between consecutive gadgets
            Vertex mid = fresh();
            edges.emplace_back(prev_exit, mid);
            edges.emplace_back(mid, entry_port);
        }
        prev_exit = exit_port;
    }
    return Graph::from_edges(next, edges);
}

Graph gen_graph(const std::string& descriptor, std::uint64_t seed) {
    auto colon = descriptor.find(':');
    std::string kind = descriptor.substr(0, colon);
    std::map<std::string, long> kv;
    if (colon != std::string::npos) {
        std::istringstream rest(descriptor.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("gen_graph: expected key=val in '" + item + "'");
            kv[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
        }
    }
    auto get = [&kv](const std::string& key, long fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    };
    if (kind == "random_regular")
        return gen_random_regular(get("n", 256), static_cast<int>(get("delta", 3)), seed);
    if (kind == "torus_grid")
        return gen_torus_grid(get("rows", 8), get("cols", 8));
    if (kind == "tree_of_cliques")
        return gen_tree_of_cliques(get("cliques", 4), get("size", 4));
    if (kind == "theta_chain")
        return gen_theta_chain(get("blocks", 3), seed);
    throw std::invalid_argument("gen_graph: unknown kind '" + kind + "'");
}

}  // namespace deltacolor
