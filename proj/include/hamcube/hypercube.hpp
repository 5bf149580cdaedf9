#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamcube/types.hpp"

namespace hamcube {

// The n-dimensional hypercube on labels [0, 2^n). Bit k of a label is
// coordinate k+1, so two labels are adjacent iff they differ in one bit.
class Hypercube {
public:
    explicit Hypercube(unsigned dimension);

    unsigned dimension() const { return dim_; }
    std::uint64_t vertex_count() const;
    bool contains(Vertex v) const;

private:
    unsigned dim_;
};

struct GraphStats {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    unsigned regularity = 0;
    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// Position of a Q_{2m} vertex inside the doubled cube Q_m □ Q_m:
// high m bits select the copy, low m bits the vertex within it.
struct CopyCoordinates {
    Vertex copy = 0;
    Vertex inner = 0;
    friend bool operator==(const CopyCoordinates&, const CopyCoordinates&) = default;
};

Parity weight_parity(Vertex v);

// Neighbors of v in ascending coordinate order: v XOR 2^k for k = 0..n-1.
std::vector<Vertex> neighbors(const Hypercube& g, Vertex v);

GraphStats graph_stats(const Hypercube& g);

CopyCoordinates split_label(unsigned m, Vertex v);
Vertex join_label(unsigned m, Vertex copy, Vertex inner);

// Cross-copy edges between copies x and y of Q_m inside Q_{2m} whose endpoint
// in copy x has the given weight parity as a Q_{2m} vertex. The two parity
// classes partition e(Q^x, Q^y), and the Even set of (x, y) equals the Odd
// set of (y, x).
std::vector<Edge> outside_edge_set(unsigned m, Vertex x, Vertex y, Parity endpoint_parity);

// Coordinate flipped along an edge: the bit index of lo XOR hi.
unsigned edge_dimension(Edge e);

// Fixed-width binary rendering, most significant bit first ("0011" in Q_4).
std::string to_binary(Vertex v, unsigned width);
Vertex parse_binary(const std::string& text);

}  // namespace hamcube
