#include "deltacolor/sim.hpp"

#include <algorithm>
#include <set>

namespace deltacolor {

VirtualGraph::VirtualGraph(std::size_t num_vertices,
                           std::vector<std::pair<Vertex, Vertex>> directed_edges, bool directed,
                           long dilation, std::vector<Vertex> representative,
                           std::vector<NodeId> ids)
    : n_(num_vertices),
      edges_(std::move(directed_edges)),
      directed_(directed),
      dilation_(dilation),
      rep_(std::move(representative)),
      ids_(std::move(ids)) {
    if (dilation_ < 1) throw std::invalid_argument("VirtualGraph: dilation must be >= 1");
    if (rep_.size() != n_ || ids_.size() != n_)
        throw std::invalid_argument("VirtualGraph: representative/id size mismatch");
    std::vector<std::set<Vertex>> und(n_);
    std::vector<std::vector<Vertex>> out(n_);
    for (auto [a, b] : edges_) {
        if (a >= n_ || b >= n_) throw std::invalid_argument("VirtualGraph: edge out of range");
        if (a == b) continue;
        und[a].insert(b);
        und[b].insert(a);
        out[a].push_back(b);
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
        offsets_[v + 1] = offsets_[v] + und[v].size();
        undirected_.insert(undirected_.end(), und[v].begin(), und[v].end());
    }
    out_offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(out[v].begin(), out[v].end());
        out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
        out_offsets_[v + 1] = out_offsets_[v] + out[v].size();
        out_.insert(out_.end(), out[v].begin(), out[v].end());
    }
}

std::size_t VirtualGraph::undirected_edge_count() const { return undirected_.size() / 2; }

int VirtualGraph::max_undirected_degree() const {
    int d = 0;
    for (std::size_t v = 0; v < n_; ++v)
        d = std::max(d, static_cast<int>(offsets_[v + 1] - offsets_[v]));
    return d;
}

int VirtualGraph::max_outdegree() const {
    int d = 0;
    for (std::size_t v = 0; v < n_; ++v)
        d = std::max(d, static_cast<int>(out_offsets_[v + 1] - out_offsets_[v]));
    return d;
}

int VirtualGraph::max_indegree() const {
    std::vector<int> indeg(n_, 0);
    for (std::size_t v = 0; v < n_; ++v)
        for (Vertex u : out_neighbors(static_cast<Vertex>(v))) indeg[u]++;
    int d = 0;
    for (int x : indeg) d = std::max(d, x);
    return d;
}

}  // namespace deltacolor
