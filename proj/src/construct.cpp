#include "hamcube/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hamcube/hypercube.hpp"

namespace hamcube {

namespace {

std::string edge_str(Edge e) {
    return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

// Matching index i lifted into every copy at once.
PerfectMatching uniform_inside(unsigned m, const PerfectMatching& inner) {
    const Vertex copies = Vertex{1} << m;
    std::vector<Vertex> partner(std::size_t{1} << (2 * m));
    for (Vertex x = 0; x < copies; ++x)
        for (Vertex u = 0; u < copies; ++u)
            partner[join_label(m, x, u)] = join_label(m, x, inner(u));
    return PerfectMatching::from_partner(std::move(partner));
}

std::vector<EdgeList> consecutive_union_edges(const MatchingDecomposition& dec) {
    std::vector<EdgeList> unions;
    unions.reserve(dec.count());
    for (std::size_t i = 0; i < dec.count(); ++i)
        unions.push_back(edge_union(dec.matching(i).edges(), dec.matching(i + 1).edges()));
    return unions;
}

}  // namespace

MatchingDecomposition base_case() {
    return MatchingDecomposition{
        2, {PerfectMatching::dimension_flip(2, 0), PerfectMatching::dimension_flip(2, 1)}};
}

std::vector<Cycle> oriented_faces(const MatchingDecomposition& dec) {
    const SimpleGraph g = SimpleGraph::hypercube(dec.dimension);
    const RotationSystem rho =
        rotation_from_decomposition(dec, RotationConvention::ParityAlternating);
    const FaceSet faces = trace_faces(g, rho);
    if (faces.count() != dec.count())
        raise(Fault::ConstructionInvariantBroken,
              "traced " + std::to_string(faces.count()) + " faces for " +
                  std::to_string(dec.count()) + " consecutive unions");

    const std::vector<EdgeList> unions = consecutive_union_edges(dec);
    std::vector<Cycle> oriented(dec.count());
    std::vector<bool> used(dec.count(), false);
    for (const FaceWalk& walk : faces.walks) {
        if (!is_hamiltonian_face(g, walk))
            raise(Fault::ConstructionInvariantBroken, "traced face is not Hamiltonian");
        const EdgeList walk_edges = cycle_edge_set(walk);
        // First-fit keeps the m = 2 seed deterministic, where both unions
        // carry the same undirected edge set.
        const auto fit = [&]() -> std::size_t {
            for (std::size_t i = 0; i < unions.size(); ++i)
                if (!used[i] && unions[i] == walk_edges) return i;
            raise(Fault::ConstructionInvariantBroken, "face matches no consecutive union");
        }();
        used[fit] = true;
        // Start at vertex 0, preserving the traced direction.
        Cycle c = walk;
        std::rotate(c.begin(), std::find(c.begin(), c.end(), Vertex{0}), c.end());
        oriented[fit] = std::move(c);
    }
    return oriented;
}

PerfectMatching build_outside(unsigned m, const Cycle& cycle) {
    if (m < 1 || 2 * m > 16) raise(Fault::Domain, "copy dimension must be between 1 and 8");
    const SimpleGraph inner_cube = SimpleGraph::hypercube(m);
    if (cycle.size() != inner_cube.vertex_count() || !is_simple_cycle(inner_cube, cycle))
        raise(Fault::Domain, "not a Hamiltonian cycle of the copy cube");

    std::vector<Vertex> partner(std::size_t{1} << (2 * m));
    std::iota(partner.begin(), partner.end(), Vertex{0});
    for (std::size_t j = 0; j < cycle.size(); ++j) {
        const Vertex x = cycle[j];
        const Vertex y = cycle[(j + 1) % cycle.size()];
        for (Edge e : outside_edge_set(m, x, y, Parity::Even)) {
            if (partner[e.lo] != e.lo || partner[e.hi] != e.hi)
                raise(Fault::ConstructionInvariantBroken,
                      "outside edges collide at " + edge_str(e));
            partner[e.lo] = e.hi;
            partner[e.hi] = e.lo;
        }
    }
    for (std::size_t v = 0; v < partner.size(); ++v)
        if (partner[v] == v)
            raise(Fault::ConstructionInvariantBroken,
                  "outside assembly leaves vertex " + std::to_string(v) + " unmatched");
    return PerfectMatching::from_partner(std::move(partner));
}

EdgeList lift_inside(unsigned m, const PerfectMatching& inner, Vertex copy) {
    if (inner.size() != (Vertex{1} << m))
        raise(Fault::Domain, "matching does not fit the copy cube");
    if (copy >= (Vertex{1} << m)) raise(Fault::Domain, "copy label out of range");
    EdgeList out;
    out.reserve(inner.size() / 2);
    for (Edge e : inner.edges())
        out.push_back(Edge{join_label(m, copy, e.lo), join_label(m, copy, e.hi)});
    return out;  // ascending: join is monotone at fixed copy
}

PerfectMatching build_patched_inside(const MatchingDecomposition& dec, std::size_t i,
                                     Vertex patched_copy) {
    const unsigned m = dec.dimension;
    const Vertex copies = Vertex{1} << m;
    if (patched_copy >= copies) raise(Fault::Domain, "patched copy out of range");
    std::vector<Vertex> partner(std::size_t{1} << (2 * m));
    for (Vertex x = 0; x < copies; ++x) {
        const PerfectMatching& inner = x == patched_copy ? dec.matching(i + 1) : dec.matching(i);
        for (Vertex u = 0; u < copies; ++u)
            partner[join_label(m, x, u)] = join_label(m, x, inner(u));
    }
    return PerfectMatching::from_partner(std::move(partner));
}

MatchingDecomposition double_step(const MatchingDecomposition& dec) {
    const unsigned m = dec.dimension;
    if (2 * m > 16) raise(Fault::Domain, "doubling past dimension 16 is unsupported");
    const std::vector<Cycle> faces = oriented_faces(dec);
    const SimpleGraph doubled = SimpleGraph::hypercube(2 * m);

    MatchingDecomposition out;
    out.dimension = 2 * m;
    out.matchings.reserve(2 * dec.count());
    for (std::size_t i = 0; i < dec.count(); ++i) {
        const PerfectMatching outside = build_outside(m, faces[i]);
        const PerfectMatching inside = build_patched_inside(dec, i, 0);

        // Replay the splice argument: the uniform-inside cover, markers in
        // copy 0, and the patch matching must merge into exactly the cycle
        // that outside ∪ inside claims to be.
        const CycleCover cover =
            union_cycles(doubled, uniform_inside(m, dec.matching(i)), outside);
        const Cycle merged = merge_cycles(doubled, cover, lift_inside(m, dec.matching(i), 0),
                                          lift_inside(m, dec.matching(i + 1), 0));
        if (cycle_edge_set(merged) != edge_union(outside.edges(), inside.edges()))
            raise(Fault::ConstructionInvariantBroken,
                  "spliced cycle disagrees with outside ∪ inside at step " + std::to_string(i));

        out.matchings.push_back(outside);
        out.matchings.push_back(inside);
    }

    if (auto issue = verify_full(out))
        raise(Fault::ConstructionInvariantBroken, issue->clause + ": " + issue->detail);
    return out;
}

MatchingDecomposition construct(unsigned n) {
    if (n < 2 || (n & (n - 1)) != 0)
        raise(Fault::NotPowerOfTwo,
              "dimension must be a power of two with n ≥ 2, got " + std::to_string(n));
    if (n > 16)
        raise(Fault::ResourceBound,
              "dimension " + std::to_string(n) + " exceeds the supported bound of 16");
    MatchingDecomposition dec = base_case();
    while (dec.dimension < n) dec = double_step(dec);
    return dec;
}

std::optional<VerificationIssue> verify_full(const MatchingDecomposition& dec,
                                             const RotationSystem* rotation) {
    const unsigned n = dec.dimension;
    const SimpleGraph g = SimpleGraph::hypercube(n);

    if (dec.matchings.size() != n)
        return VerificationIssue{"matching_count", std::to_string(dec.matchings.size()) +
                                                       " matchings for dimension " +
                                                       std::to_string(n)};
    for (std::size_t i = 0; i < n; ++i)
        if (dec.matchings[i].size() != g.vertex_count())
            return VerificationIssue{"matching_count",
                                     "matching " + std::to_string(i + 1) + " covers " +
                                         std::to_string(dec.matchings[i].size()) +
                                         " vertices, expected " +
                                         std::to_string(g.vertex_count())};

    std::vector<EdgeList> matching_edges;
    matching_edges.reserve(n);
    for (const PerfectMatching& m : dec.matchings) matching_edges.push_back(m.edges());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const EdgeList shared = edge_intersection(matching_edges[i], matching_edges[j]);
            if (!shared.empty())
                return VerificationIssue{"matchings_disjoint",
                                         "matchings " + std::to_string(i + 1) + " and " +
                                             std::to_string(j + 1) + " share edge " +
                                             edge_str(shared.front())};
        }

    for (std::size_t i = 0; i < n; ++i)
        if (auto bad = validate_matching(g, dec.matchings[i]))
            return VerificationIssue{"matching_perfect",
                                     "matching " + std::to_string(i + 1) + ": " + bad->describe()};

    EdgeList all;
    for (const EdgeList& es : matching_edges) all.insert(all.end(), es.begin(), es.end());
    std::sort(all.begin(), all.end());
    if (all != g.edges()) {
        const EdgeList cube_edges = g.edges();
        const EdgeList missing = edge_difference(cube_edges, all);
        const std::string detail =
            missing.empty() ? "edge " + edge_str(edge_difference(all, cube_edges).front()) +
                                  " is not a cube edge or appears twice"
                            : "edge " + edge_str(missing.front()) + " is uncovered";
        return VerificationIssue{"matchings_cover_all_edges", detail};
    }

    for (std::size_t i = 0; i < n; ++i) {
        const CycleCover cover = union_cycles(g, dec.matching(i), dec.matching(i + 1));
        if (cover.cycles.size() != 1)
            return VerificationIssue{"consecutive_unions_hamiltonian",
                                     "union of matchings " + std::to_string(i + 1) + " and " +
                                         std::to_string((i + 1) % n + 1) + " splits into " +
                                         std::to_string(cover.cycles.size()) + " cycles"};
    }

    const RotationSystem rho =
        rotation ? *rotation
                 : rotation_from_decomposition(dec, RotationConvention::ParityAlternating);
    if (auto bad = rotation_violation(g, rho)) return VerificationIssue{"rotation_valid", *bad};

    const FaceSet faces = trace_faces(g, rho);
    for (std::size_t k = 0; k < faces.count(); ++k)
        if (!is_hamiltonian_face(g, faces.walks[k]))
            return VerificationIssue{"faces_hamiltonian",
                                     "face " + std::to_string(k + 1) + " of length " +
                                         std::to_string(faces.walks[k].size()) +
                                         " is not Hamiltonian"};

    std::map<EdgeList, std::size_t> remaining;
    for (std::size_t i = 0; i < n; ++i)
        ++remaining[edge_union(matching_edges[i], matching_edges[(i + 1) % n])];
    for (std::size_t k = 0; k < faces.count(); ++k) {
        const auto it = remaining.find(cycle_edge_set(faces.walks[k]));
        if (it == remaining.end() || it->second == 0)
            return VerificationIssue{"faces_match_unions",
                                     "face " + std::to_string(k + 1) +
                                         " matches no unused consecutive union"};
        --it->second;
    }

    return std::nullopt;
}

}  // namespace hamcube
