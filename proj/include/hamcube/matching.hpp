#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamcube/graph.hpp"
#include "hamcube/types.hpp"

namespace hamcube {

// Perfect matching stored as a total partner map: O(1) traversal, linear validation.
struct PerfectMatching {
    std::vector<Vertex> partner;

    Vertex size() const { return static_cast<Vertex>(partner.size()); }
    Vertex operator()(Vertex v) const { return partner[v]; }

    static PerfectMatching from_partner(std::vector<Vertex> partner);
    static PerfectMatching from_edges(Vertex vertex_count, const std::vector<Edge>& edges);
    // Partner v -> v XOR 2^k on the 2^dimension labels.
    static PerfectMatching dimension_flip(unsigned dimension, unsigned k);

    std::vector<Edge> edges() const;  // sorted canonical list
    bool contains(Edge e) const { return e.lo < size() && partner[e.lo] == e.hi; }
    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

struct MatchingViolation {
    enum class Kind { OutOfRange, FixedPoint, NotInvolution, NonEdge };
    Kind kind;
    Vertex vertex;  // first offending vertex
    std::string describe() const;
};

// nullopt means every invariant holds: involution, no fixed point, edges of g.
std::optional<MatchingViolation> validate_matching(const SimpleGraph& g, const PerfectMatching& m);

using Cycle = std::vector<Vertex>;
using EdgeList = std::vector<Edge>;  // sorted; doubles as a matching fragment

struct CycleCover {
    std::vector<Cycle> cycles;
};

// Cyclic list of n pairwise-disjoint perfect matchings of Q_n whose
// consecutive unions are Hamiltonian cycles.
struct MatchingDecomposition {
    unsigned dimension = 0;
    std::vector<PerfectMatching> matchings;

    std::size_t count() const { return matchings.size(); }
    const PerfectMatching& matching(std::size_t i) const {
        return matchings[i % matchings.size()];
    }
    friend bool operator==(const MatchingDecomposition&, const MatchingDecomposition&) = default;
};

// Smallest vertex first, then the direction whose second vertex is smaller.
Cycle canonical_cycle(const Cycle& c);

bool is_simple_cycle(const SimpleGraph& g, const Cycle& c);

// Sorted canonical edges of a simple cycle; rejects repeated vertices.
EdgeList cycle_edge_set(const Cycle& c);

EdgeList sorted_edges(EdgeList edges);
EdgeList edge_intersection(const EdgeList& a, const EdgeList& b);  // inputs sorted
EdgeList edge_union(const EdgeList& a, const EdgeList& b);
EdgeList edge_difference(const EdgeList& a, const EdgeList& b);

// Spanning cycle cover of the union of two edge-disjoint perfect matchings;
// cycles alternate a-edges and b-edges and come out canonical, ordered by
// smallest vertex. A shared edge raises SharedEdge.
CycleCover union_cycles(const SimpleGraph& g, const PerfectMatching& a, const PerfectMatching& b);

// Splices a cycle cover into one cycle: removes the marker edges (one per
// cover cycle) and reconnects along the patch, whose union with the markers
// must itself form a single cycle. All preconditions are checked and raise
// CycleWithoutMarker, MultipleMarkers, MarkerOffCycle, PatchOverlaps or
// PatchNotCycle. Returns the canonical merged cycle with edge set
// (cover edges \ markers) ∪ patch.
Cycle merge_cycles(const SimpleGraph& g, const CycleCover& cover, const EdgeList& markers,
                   const EdgeList& patch);

}  // namespace hamcube
