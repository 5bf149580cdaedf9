#include "hamcube/graph.hpp"

#include <algorithm>

#include "hamcube/hypercube.hpp"

namespace hamcube {

namespace {
constexpr unsigned kMaxAdjacencyDim = 20;  // 2^20 vertices is the explicit-adjacency limit
}

SimpleGraph SimpleGraph::from_edges(Vertex vertex_count, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (const Edge& e : edges) {
        if (e.hi >= vertex_count)
            raise(Fault::Domain, "edge endpoint " + std::to_string(e.hi) + " out of range");
        if (e.lo == e.hi)
            raise(Fault::Domain, "loop at vertex " + std::to_string(e.lo));
        adj[e.lo].push_back(e.hi);
        adj[e.hi].push_back(e.lo);
    }
    return from_adjacency(std::move(adj));
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
    SimpleGraph g;
    const Vertex n = static_cast<Vertex>(adjacency.size());
    for (Vertex v = 0; v < n; ++v) {
        auto& nbrs = adjacency[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            raise(Fault::Domain, "parallel edge at vertex " + std::to_string(v));
        for (Vertex u : nbrs) {
            if (u >= n) raise(Fault::Domain, "neighbor out of range at vertex " + std::to_string(v));
            if (u == v) raise(Fault::Domain, "loop at vertex " + std::to_string(v));
        }
        g.edge_count_ += nbrs.size();
    }
    // symmetry
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : adjacency[v])
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                raise(Fault::Domain, "adjacency not symmetric at " + std::to_string(v) + "-" +
                                         std::to_string(u));
    g.adjacency_ = std::move(adjacency);
    g.edge_count_ /= 2;
    return g;
}

SimpleGraph SimpleGraph::hypercube(unsigned dimension) {
    if (dimension < 1 || dimension > kMaxAdjacencyDim)
        raise(Fault::Domain, "hypercube dimension " + std::to_string(dimension) +
                                 " outside explicit-adjacency range");
    const Vertex n = Vertex{1} << dimension;
    SimpleGraph g;
    g.adjacency_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& nbrs = g.adjacency_[v];
        nbrs.reserve(dimension);
        for (unsigned k = 0; k < dimension; ++k) nbrs.push_back(v ^ (Vertex{1} << k));
        std::sort(nbrs.begin(), nbrs.end());
    }
    g.edge_count_ = std::uint64_t{dimension} << (dimension - 1);
    return g;
}

SimpleGraph SimpleGraph::complete(Vertex vertex_count) {
    SimpleGraph g;
    g.adjacency_.resize(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v)
        for (Vertex u = 0; u < vertex_count; ++u)
            if (u != v) g.adjacency_[v].push_back(u);
    g.edge_count_ = std::uint64_t{vertex_count} * (vertex_count - 1) / 2;
    return g;
}

SimpleGraph SimpleGraph::cycle(Vertex vertex_count) {
    if (vertex_count < 3) raise(Fault::Domain, "cycle graph needs at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v)
        edges.push_back(make_edge(v, (v + 1) % vertex_count));
    return from_edges(vertex_count, edges);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool SimpleGraph::connected() const {
    const Vertex n = vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : adjacency_[v])
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex u : adjacency_[v])
            if (v < u) out.push_back(Edge{v, u});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hamcube
