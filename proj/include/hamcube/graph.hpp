#pragma once

#include <cstdint>
#include <vector>

#include "hamcube/types.hpp"

namespace hamcube {

// Finite simple graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;

    static SimpleGraph from_edges(Vertex vertex_count, const std::vector<Edge>& edges);
    static SimpleGraph from_adjacency(std::vector<std::vector<Vertex>> adjacency);
    static SimpleGraph hypercube(unsigned dimension);
    static SimpleGraph complete(Vertex vertex_count);
    static SimpleGraph cycle(Vertex vertex_count);

    Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    unsigned degree(Vertex v) const { return static_cast<unsigned>(adjacency_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool connected() const;

    std::vector<Edge> edges() const;  // sorted canonical list

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::uint64_t edge_count_ = 0;
};

}  // namespace hamcube
