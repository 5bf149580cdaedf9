#include "hamcube/embedding.hpp"

#include <algorithm>

#include "hamcube/hypercube.hpp"

namespace hamcube {

std::optional<std::string> rotation_violation(const SimpleGraph& g, const RotationSystem& rho) {
    if (rho.vertex_count() != g.vertex_count())
        return "rotation lists " + std::to_string(rho.vertex_count()) + " vertices, graph has " +
               std::to_string(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> listed = rho.order[v];
        std::sort(listed.begin(), listed.end());
        const std::vector<Vertex>& expected = g.neighbors(v);  // ascending already
        if (listed != expected)
            return "order at vertex " + std::to_string(v) +
                   " is not a permutation of its neighbors";
    }
    return std::nullopt;
}

void validate_rotation(const SimpleGraph& g, const RotationSystem& rho) {
    if (auto bad = rotation_violation(g, rho)) raise(Fault::InvalidRotation, *bad);
}

FaceSet trace_faces(const SimpleGraph& g, const RotationSystem& rho) {
    validate_rotation(g, rho);

    // Darts flattened as offset[u] + position-in-order[u].
    std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        offset[v + 1] = offset[v] + rho.order[v].size();
    std::vector<bool> visited(offset.back(), false);

    auto position = [&rho](Vertex v, Vertex neighbor) {
        const auto& ord = rho.order[v];
        return static_cast<std::size_t>(std::find(ord.begin(), ord.end(), neighbor) - ord.begin());
    };

    FaceSet out;
    for (Vertex u0 = 0; u0 < g.vertex_count(); ++u0) {
        for (std::size_t i0 = 0; i0 < rho.order[u0].size(); ++i0) {
            if (visited[offset[u0] + i0]) continue;
            FaceWalk walk;
            Vertex u = u0;
            std::size_t i = i0;
            do {
                visited[offset[u] + i] = true;
                walk.push_back(u);
                const Vertex v = rho.order[u][i];
                const std::size_t j = position(v, u);
                u = v;
                i = (j + 1) % rho.order[v].size();
            } while (!(u == u0 && i == i0));
            out.walks.push_back(std::move(walk));
        }
    }
    return out;
}

unsigned euler_genus(std::uint64_t vertices, std::uint64_t edges, std::uint64_t faces) {
    const std::int64_t chi = static_cast<std::int64_t>(vertices) -
                             static_cast<std::int64_t>(edges) + static_cast<std::int64_t>(faces);
    if (chi > 2) raise(Fault::Domain, "Euler characteristic " + std::to_string(chi) + " above 2");
    if ((2 - chi) % 2 != 0)
        raise(Fault::NonOrientableOrInvalid,
              "odd Euler characteristic " + std::to_string(chi));
    return static_cast<unsigned>((2 - chi) / 2);
}

bool is_hamiltonian_face(const SimpleGraph& g, const FaceWalk& walk) {
    if (walk.size() != g.vertex_count()) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : walk) {
        if (v >= g.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[(i + 1) % walk.size()])) return false;
    return true;
}

EmbeddingReport verify_hamiltonian_embedding(const SimpleGraph& g, const RotationSystem& rho) {
    EmbeddingReport report;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    report.faces = trace_faces(g, rho);
    report.genus = euler_genus(report.vertices, report.edges, report.faces.count());
    report.all_faces_hamiltonian =
        std::all_of(report.faces.walks.begin(), report.faces.walks.end(),
                    [&g](const FaceWalk& w) { return is_hamiltonian_face(g, w); });
    return report;
}

RotationSystem rotation_from_decomposition(const MatchingDecomposition& dec,
                                           RotationConvention convention) {
    const unsigned n = dec.dimension;
    const Vertex count = Vertex{1} << n;
    if (dec.matchings.size() != n)
        raise(Fault::Domain, "need " + std::to_string(n) + " matchings, got " +
                                 std::to_string(dec.matchings.size()));
    for (const PerfectMatching& m : dec.matchings)
        if (m.size() != count)
            raise(Fault::Domain, "matching size " + std::to_string(m.size()) +
                                     " does not fit dimension " + std::to_string(n));

    RotationSystem rho;
    rho.order.assign(count, {});
    for (Vertex v = 0; v < count; ++v) {
        std::vector<Vertex>& ord = rho.order[v];
        ord.reserve(n);
        for (unsigned k = 0; k < n; ++k) ord.push_back(dec.matchings[k](v));
        if (convention == RotationConvention::ParityAlternating &&
            weight_parity(v) == Parity::Odd)
            std::reverse(ord.begin(), ord.end());
    }
    return rho;
}

RotationSystem reversed(const RotationSystem& rho) {
    RotationSystem out = rho;
    for (auto& ord : out.order) std::reverse(ord.begin(), ord.end());
    return out;
}

bool rotations_equal(const RotationSystem& a, const RotationSystem& b) {
    if (a.order.size() != b.order.size()) return false;
    for (std::size_t v = 0; v < a.order.size(); ++v) {
        const auto& x = a.order[v];
        const auto& y = b.order[v];
        if (x.size() != y.size()) return false;
        if (x.empty()) continue;
        std::vector<Vertex> doubled = x;
        doubled.insert(doubled.end(), x.begin(), x.end());
        if (std::search(doubled.begin(), doubled.end(), y.begin(), y.end()) == doubled.end())
            return false;
    }
    return true;
}

}  // namespace hamcube
