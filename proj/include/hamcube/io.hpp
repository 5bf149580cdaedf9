#pragma once

#include <optional>
#include <string>

#include "hamcube/embedding.hpp"
#include "hamcube/graph.hpp"
#include "hamcube/matching.hpp"

namespace hamcube {

// Text formats. Both serializers are canonical (fixed field order, ascending
// vertices, '\n' endings) so equal values produce identical bytes; parsers
// read the same layout back and report offending line numbers via Parse.

// decomposition <n> <matching-count>, then blocks `matching <i>` (1-based,
// sequential) of one `<u> <v>` edge per line, labels fixed-width binary.
std::string serialize_decomposition(const MatchingDecomposition& dec);

// Syntax-strict, semantics-lenient: labels and block structure must be well
// formed, but matchings are rebuilt verbatim so verification — not parsing —
// reports duplicate or missing coverage.
MatchingDecomposition parse_decomposition(const std::string& text);

// rotation <n> hypercube | rotation <count> general, then one line per
// vertex ascending: `<vertex> : <nbr1> ... <nbrk>`, cyclic order verbatim.
// Hypercube labels are fixed-width binary and lists must have exactly n
// entries; general labels are decimal with any positive list length.
std::string serialize_rotation_hypercube(const RotationSystem& rho, unsigned dimension);
std::string serialize_rotation_general(const RotationSystem& rho);

struct ParsedRotation {
    RotationSystem rotation;
    std::optional<unsigned> dimension;  // set for the hypercube family
};

ParsedRotation parse_rotation(const std::string& text);

// graph <vertex-count>, then `<v> : <neighbors...>` decimal lines, ascending.
std::string serialize_adjacency(const SimpleGraph& g);
SimpleGraph parse_adjacency(const std::string& text);

// Whole-file helpers; failures raise Io.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hamcube
