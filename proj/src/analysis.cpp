#include "hamcube/analysis.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "hamcube/matching.hpp"

namespace hamcube {

NecessaryConditionReport necessary_conditions(std::uint64_t order, std::uint64_t degree) {
    if (order < 3) raise(Fault::Domain, "order must be at least 3");
    if (degree < 1 || degree >= order) raise(Fault::Domain, "degree must satisfy 1 ≤ d < n");
    if (order > (std::uint64_t{1} << 31))
        raise(Fault::Domain, "order above 2^31 is not supported");

    const std::uint64_t n = order;
    const std::uint64_t d = degree;
    NecessaryConditionReport r;
    r.order = n;
    r.degree = d;
    r.congruence_holds = (n * d) % 4 == (2 * (n + d)) % 4;
    r.clause_even_order_or_degree = n % 2 == 0 || d % 2 == 0;
    r.clause_mixed_parity = n % 2 == d % 2 || n % 4 == 2 || d % 4 == 2;
    r.clause_both_even = n % 2 != 0 || d % 2 != 0 || (n * d) % 4 != (n + d) % 4;
    r.implied_face_count = d;
    // v − e + f = 2 − 2g with v = n, e = nd/2, f = d gives g = (2 − n + nd/2 − d)/2.
    r.genus_numerator = 4 - 2 * static_cast<std::int64_t>(n) + static_cast<std::int64_t>(n * d) -
                        2 * static_cast<std::int64_t>(d);
    if (r.genus_numerator % 4 == 0) r.implied_genus = r.genus_numerator / 4;
    return r;
}

IntersectionProfile intersection_profile(const SimpleGraph& g, const FaceSet& faces) {
    std::vector<EdgeList> edge_sets;
    edge_sets.reserve(faces.count());
    for (const FaceWalk& walk : faces.walks) {
        if (!is_simple_cycle(g, walk))
            raise(Fault::Domain, "face is not a simple cycle of the graph");
        edge_sets.push_back(cycle_edge_set(walk));
    }

    IntersectionProfile profile;
    profile.face_count = faces.count();
    for (std::size_t i = 0; i < edge_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < edge_sets.size(); ++j) {
            const EdgeList shared = edge_intersection(edge_sets[i], edge_sets[j]);
            FacePairIntersection pair;
            pair.i = i;
            pair.j = j;
            pair.size = shared.size();

            std::vector<unsigned> incidence(g.vertex_count(), 0);
            for (Edge e : shared) {
                ++incidence[e.lo];
                ++incidence[e.hi];
            }
            pair.shares_adjacent_edges =
                std::any_of(incidence.begin(), incidence.end(), [](unsigned c) { return c > 1; });

            if (shared.empty()) {
                pair.classification = FacePairIntersection::Kind::Empty;
            } else if (shared.size() * 2 == g.vertex_count() && !pair.shares_adjacent_edges &&
                       [&] {
                           try {
                               PerfectMatching::from_edges(g.vertex_count(), shared);
                               return true;
                           } catch (const Error&) {
                               return false;
                           }
                       }()) {
                pair.classification = FacePairIntersection::Kind::PerfectMatching;
            } else {
                pair.classification = FacePairIntersection::Kind::Other;
            }
            profile.any_shares_adjacent_edges |= pair.shares_adjacent_edges;
            profile.pairs.push_back(pair);
        }
    }
    return profile;
}

WeightedIntersectionGraph intersection_graph(const IntersectionProfile& profile) {
    WeightedIntersectionGraph w;
    w.node_count = profile.face_count;
    for (const FacePairIntersection& pair : profile.pairs)
        if (pair.size > 0)
            w.edges.push_back({pair.i, pair.j, pair.size});
    return w;
}

IntersectionShape intersection_shape(const WeightedIntersectionGraph& w) {
    IntersectionShape shape;
    shape.degenerate = w.node_count < 3;

    if (!w.edges.empty()) {
        const std::uint64_t first = w.edges.front().weight;
        if (std::all_of(w.edges.begin(), w.edges.end(),
                        [first](const auto& e) { return e.weight == first; }))
            shape.common_weight = first;
    }

    if (shape.degenerate || w.edges.size() != w.node_count) return shape;  // cycle has n edges
    std::vector<std::vector<std::size_t>> adj(w.node_count);
    for (const auto& e : w.edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    if (std::any_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() != 2; }))
        return shape;
    // 2-regular with n edges: a single cycle iff connected.
    std::vector<bool> seen(w.node_count, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t at = stack.back();
        stack.pop_back();
        for (std::size_t next : adj[at])
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                stack.push_back(next);
            }
    }
    shape.single_cycle = reached == w.node_count;
    return shape;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t factorial_saturating(std::uint64_t k) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 2; i <= k; ++i) out = saturating_mul(out, i);
    return out;
}

// Uniform draw from [0, k) by rejection: discard r = eng() while
// r < 2^64 mod k, then reduce r mod k. Pinned for reproducibility.
std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;
    std::uint64_t r = eng();
    while (r < threshold) r = eng();
    return r % k;
}

std::size_t count_hamiltonian_faces(const SimpleGraph& g, const FaceSet& faces) {
    return static_cast<std::size_t>(
        std::count_if(faces.walks.begin(), faces.walks.end(),
                      [&g](const FaceWalk& w) { return is_hamiltonian_face(g, w); }));
}

void record_candidate(const SimpleGraph& g, const RotationSystem& rho, SearchOutcome& outcome) {
    const FaceSet faces = trace_faces(g, rho);
    const std::size_t hamiltonian = count_hamiltonian_faces(g, faces);
    outcome.max_hamiltonian_faces = std::max(outcome.max_hamiltonian_faces, hamiltonian);
    if (hamiltonian == faces.count() &&
        std::find(outcome.embeddings_found.begin(), outcome.embeddings_found.end(), rho) ==
            outcome.embeddings_found.end())
        outcome.embeddings_found.push_back(rho);
}

void require_searchable(const SimpleGraph& g) {
    if (g.vertex_count() < 3) raise(Fault::Domain, "graph too small to search");
    if (!g.connected()) raise(Fault::Domain, "graph must be connected");
}

}  // namespace

std::uint64_t rotation_space_size(const SimpleGraph& g) {
    std::uint64_t size = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        size = saturating_mul(size, factorial_saturating(g.degree(v) == 0 ? 0 : g.degree(v) - 1));
    return size;
}

SearchOutcome exhaustive_search(const SimpleGraph& g, std::uint64_t budget,
                                const std::string& description) {
    require_searchable(g);
    const std::uint64_t space = rotation_space_size(g);
    if (space > budget)
        raise(Fault::ResourceBound, "rotation space holds " + std::to_string(space) +
                                        " candidates, budget is " + std::to_string(budget));

    SearchOutcome outcome;
    outcome.graph = description;
    outcome.mode = SearchOutcome::Mode::Exhaustive;
    outcome.budget = budget;

    // Odometer over per-vertex suffixes: order[v] = (first neighbor pinned,
    // permuted rest); next_permutation carries like digit rollover.
    RotationSystem rho;
    rho.order.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) rho.order[v] = g.neighbors(v);  // ascending

    bool more = true;
    while (more) {
        record_candidate(g, rho, outcome);
        ++outcome.candidates_examined;
        more = false;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto& ord = rho.order[v];
            if (ord.size() >= 2 && std::next_permutation(ord.begin() + 1, ord.end())) {
                more = true;
                break;
            }  // wrapped back to ascending; carry to the next vertex
        }
    }
    return outcome;
}

SearchOutcome random_search(const SimpleGraph& g, std::uint64_t budget, std::uint64_t seed,
                            const std::string& description) {
    require_searchable(g);
    if (budget < 1) raise(Fault::Domain, "budget must be at least 1");

    SearchOutcome outcome;
    outcome.graph = description;
    outcome.mode = SearchOutcome::Mode::Random;
    outcome.seed = seed;
    outcome.budget = budget;

    std::mt19937_64 eng(seed);
    RotationSystem rho;
    rho.order.resize(g.vertex_count());
    for (std::uint64_t round = 0; round < budget; ++round) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto& ord = rho.order[v];
            ord = g.neighbors(v);
            // Fisher–Yates on the suffix, high index down to 1; position 0
            // stays the smallest neighbor, normalizing the cyclic class.
            if (ord.size() >= 3)
                for (std::size_t i = ord.size() - 1; i >= 2; --i)
                    std::swap(ord[i], ord[1 + bounded(eng, i)]);
        }
        record_candidate(g, rho, outcome);
        ++outcome.candidates_examined;
    }
    return outcome;
}

}  // namespace hamcube
