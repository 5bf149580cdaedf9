#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamcube {

using Vertex = std::uint32_t;

enum class Parity : unsigned { Even = 0, Odd = 1 };

inline Parity opposite(Parity p) {
    return p == Parity::Even ? Parity::Odd : Parity::Even;
}

// Canonical undirected edge, lo < hi.
struct Edge {
    Vertex lo = 0;
    Vertex hi = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

enum class Fault {
    Domain,                       // argument outside an operation's domain
    Io,                           // file system failure
    Parse,                        // malformed input file
    SharedEdge,                   // two matchings share an edge
    NotAMatching,                 // edge list is not vertex-disjoint or not host edges
    InvalidCover,                 // cycle cover fails its structural invariants
    CycleWithoutMarker,           // a cover cycle carries no marker edge
    MultipleMarkers,              // a cover cycle carries more than one marker edge
    MarkerOffCycle,               // a marker edge lies on no cover cycle
    PatchOverlaps,                // patch shares an edge with the markers or a cover cycle
    PatchNotCycle,                // markers ∪ patch is not a single simple cycle
    InvalidRotation,              // rotation list is not a full cyclic order of the neighbors
    NonOrientableOrInvalid,       // odd Euler characteristic
    NotPowerOfTwo,                // construction dimension is not a power of two
    ResourceBound,                // configured resource budget exceeded
    ConstructionInvariantBroken,  // a doubling-step invariant failed verification
};

const char* fault_name(Fault f);

class Error : public std::runtime_error {
public:
    Error(Fault fault, const std::string& message)
        : std::runtime_error(std::string(fault_name(fault)) + ": " + message), fault_(fault) {}

    Fault fault() const { return fault_; }

private:
    Fault fault_;
};

[[noreturn]] inline void raise(Fault fault, const std::string& message) {
    throw Error(fault, message);
}

}  // namespace hamcube
