#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcube/graph.hpp"
#include "hamcube/matching.hpp"
#include "hamcube/types.hpp"

namespace hamcube {

// Rotation system: order[v] is the cyclic order of v's neighbors. Together
// with the dart rule in trace_faces it pins down an orientable embedding.
struct RotationSystem {
    std::vector<std::vector<Vertex>> order;

    Vertex vertex_count() const { return static_cast<Vertex>(order.size()); }
    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// nullopt when every order[v] is a permutation of v's neighbors.
std::optional<std::string> rotation_violation(const SimpleGraph& g, const RotationSystem& rho);
// Same check, raising InvalidRotation.
void validate_rotation(const SimpleGraph& g, const RotationSystem& rho);

// Closed walk; consecutive vertices (wrapping) are adjacent. Vertices may
// repeat in general faces.
using FaceWalk = std::vector<Vertex>;

struct FaceSet {
    std::vector<FaceWalk> walks;
    std::size_t count() const { return walks.size(); }
};

// Orbits of the dart successor: from dart (u, v) continue with (v, w) where w
// follows u in order[v]. Each face starts at its first dart in (vertex,
// position) scan order, so the output is deterministic.
FaceSet trace_faces(const SimpleGraph& g, const RotationSystem& rho);

// Genus from v − e + f. Odd characteristic cannot come from an orientable
// embedding → NonOrientableOrInvalid; characteristic above 2 → Domain.
unsigned euler_genus(std::uint64_t vertices, std::uint64_t edges, std::uint64_t faces);

// Walk visits every vertex of g exactly once.
bool is_hamiltonian_face(const SimpleGraph& g, const FaceWalk& walk);

struct EmbeddingReport {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    FaceSet faces;
    unsigned genus = 0;
    bool all_faces_hamiltonian = false;
};

// Validates rho, traces, and evaluates the Hamiltonian-faces property.
EmbeddingReport verify_hamiltonian_embedding(const SimpleGraph& g, const RotationSystem& rho);

enum class RotationConvention {
    ParityAlternating,  // ascending matching index at even-weight vertices, descending at odd
    Uniform,            // ascending everywhere (breaks the face structure; kept as a control)
};

RotationSystem rotation_from_decomposition(const MatchingDecomposition& dec,
                                           RotationConvention convention);

// Mirror embedding: same faces up to direction, same genus.
RotationSystem reversed(const RotationSystem& rho);

// Equality up to cyclic shift at each vertex (no reflection).
bool rotations_equal(const RotationSystem& a, const RotationSystem& b);

}  // namespace hamcube
