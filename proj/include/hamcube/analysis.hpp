#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcube/embedding.hpp"
#include "hamcube/graph.hpp"

namespace hamcube {

// Counting consequences of "every face is a Hamiltonian cycle" for a
// d-regular graph of order n: f = d, and Euler's formula forces
// n·d ≡ 2(n + d) (mod 4). Three conventional parity clauses are evaluated verbatim
// for the record, but feasibility (congruence_holds) is gated on the master
// congruence alone: the printed both-even clause rejects (16, 4), which the
// construction realizes, so it cannot be taken at face value.
struct NecessaryConditionReport {
    std::uint64_t order = 0;
    std::uint64_t degree = 0;
    bool congruence_holds = false;       // n·d ≡ 2(n+d) (mod 4)
    bool clause_even_order_or_degree = false;   // at least one of n, d even
    bool clause_mixed_parity = false;           // n ≢ d (2) ⟹ n ≡ 2 or d ≡ 2 (mod 4)
    bool clause_both_even = false;              // literal both-even clause, recorded as stated
    std::uint64_t implied_face_count = 0;       // = degree
    std::int64_t genus_numerator = 0;           // implied genus = numerator / 4
    std::optional<std::int64_t> implied_genus;  // set iff the quotient is an integer
};

// Preconditions: order ≥ 3, 1 ≤ degree < order.
NecessaryConditionReport necessary_conditions(std::uint64_t order, std::uint64_t degree);

struct FacePairIntersection {
    enum class Kind { Empty, PerfectMatching, Other };
    std::size_t i = 0;  // face indices, i < j
    std::size_t j = 0;
    std::uint64_t size = 0;  // shared undirected edges
    Kind classification = Kind::Empty;
    bool shares_adjacent_edges = false;  // two shared edges meet at a vertex
};

struct IntersectionProfile {
    std::size_t face_count = 0;
    std::vector<FacePairIntersection> pairs;  // all unordered pairs, lexicographic
    bool any_shares_adjacent_edges = false;
};

// Pairwise edge-set intersections of the faces, which must be simple cycles.
IntersectionProfile intersection_profile(const SimpleGraph& g, const FaceSet& faces);

// Faces as nodes, one weighted edge per nonempty pairwise intersection.
struct WeightedIntersectionGraph {
    struct WeightedEdge {
        std::size_t i = 0;
        std::size_t j = 0;  // i < j
        std::uint64_t weight = 0;
    };
    std::size_t node_count = 0;
    std::vector<WeightedEdge> edges;
};

struct IntersectionShape {
    bool degenerate = false;    // fewer than 3 nodes: no cycle possible
    bool single_cycle = false;  // every node has weighted degree 2 and one component
    std::optional<std::uint64_t> common_weight;  // set when all weights agree
};

WeightedIntersectionGraph intersection_graph(const IntersectionProfile& profile);
IntersectionShape intersection_shape(const WeightedIntersectionGraph& w);

struct SearchOutcome {
    enum class Mode { Exhaustive, Random };
    std::string graph;  // caller-supplied description for reports
    Mode mode = Mode::Exhaustive;
    std::uint64_t candidates_examined = 0;
    std::vector<RotationSystem> embeddings_found;  // deduplicated, normalized
    std::size_t max_hamiltonian_faces = 0;         // best single candidate seen
    std::uint64_t seed = 0;                        // Random only
    std::uint64_t budget = 0;
};

// Saturating Π_v (deg(v) − 1)!: candidates with each first neighbor pinned,
// which quotients out cyclic rotations but not reflections.
std::uint64_t rotation_space_size(const SimpleGraph& g);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Enumerates the whole pinned-first-neighbor space in odometer order and
// keeps every rotation system whose faces are all Hamiltonian. A space
// larger than the budget raises ResourceBound naming the space size.
SearchOutcome exhaustive_search(const SimpleGraph& g,
                                std::uint64_t budget = kDefaultSearchBudget,
                                const std::string& description = "");

// Uniform independent cyclic order per vertex, from mt19937_64(seed) with a
// rejection-sampled bounded draw and a Fisher–Yates shuffle of each
// neighbor-list suffix (first neighbor pinned). Fully reproducible.
SearchOutcome random_search(const SimpleGraph& g, std::uint64_t budget, std::uint64_t seed,
                            const std::string& description = "");

}  // namespace hamcube
