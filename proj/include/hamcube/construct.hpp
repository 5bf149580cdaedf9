#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamcube/embedding.hpp"
#include "hamcube/matching.hpp"

namespace hamcube {

// Q_2 seed: bit-0 flip, bit-1 flip. Both consecutive unions are the 4-cycle.
MatchingDecomposition base_case();

// Directed Hamiltonian cycles realizing the consecutive unions M_i ∪ M_{i+1},
// read off the traced faces of the parity-alternating rotation. Entry i has
// the edge set of matching(i) ∪ matching(i+1), starts at vertex 0, and keeps
// the traced direction — orientation feeds build_outside.
std::vector<Cycle> oriented_faces(const MatchingDecomposition& dec);

// Cross-copy matching of the 2m-cube threaded along a directed Hamiltonian
// cycle of the m-cube: every even-parity vertex (parity of the full 2m-bit
// label) of copy x is matched to its twin in the successor copy of x.
PerfectMatching build_outside(unsigned m, const Cycle& cycle);

// Edges of `inner` placed inside copy `copy` of the 2m-cube; sorted.
EdgeList lift_inside(unsigned m, const PerfectMatching& inner, Vertex copy);

// Copy-local matching of the 2m-cube: matching i inside every copy except
// `patched_copy`, which takes matching i+1 (cyclically) instead.
PerfectMatching build_patched_inside(const MatchingDecomposition& dec, std::size_t i,
                                     Vertex patched_copy = 0);

// One doubling: a decomposition of the m-cube becomes one of the 2m-cube with
// matchings interleaved (O_1, P_1, O_2, P_2, …, O_m, P_m). Each step replays
// the splice argument (uniform-inside cover + patch in copy 0) and then runs
// the full verification; any failure raises ConstructionInvariantBroken.
MatchingDecomposition double_step(const MatchingDecomposition& dec);

// Doubles up from the base case. n must be a power of two with 2 ≤ n ≤ 16.
MatchingDecomposition construct(unsigned n);

struct VerificationIssue {
    std::string clause;
    std::string detail;
};

// Full decomposition-and-embedding check. Clauses, in evaluation order:
// matching_count, matchings_disjoint, matching_perfect,
// matchings_cover_all_edges, consecutive_unions_hamiltonian, rotation_valid,
// faces_hamiltonian, faces_match_unions. nullopt means all pass. Disjointness
// runs before perfectness so a duplicated edge is reported as the shared edge
// it creates rather than as the hole it leaves. The embedding clauses check
// `rotation` when one is supplied (a rotation loaded from a file), otherwise
// the parity-alternating rotation derived from dec.
std::optional<VerificationIssue> verify_full(const MatchingDecomposition& dec,
                                             const RotationSystem* rotation = nullptr);

}  // namespace hamcube
