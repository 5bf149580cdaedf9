#include "hamcube/matching.hpp"

#include <algorithm>
#include <numeric>

namespace hamcube {

namespace {

std::string vertex_pair(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::string edge_str(Edge e) { return vertex_pair(e.lo, e.hi); }

}  // namespace

PerfectMatching PerfectMatching::from_partner(std::vector<Vertex> partner) {
    return PerfectMatching{std::move(partner)};
}

PerfectMatching PerfectMatching::from_edges(Vertex vertex_count, const std::vector<Edge>& edges) {
    // Strict: rejects anything short of a perfect matching on [0, vertex_count).
    std::vector<Vertex> partner(vertex_count);
    std::iota(partner.begin(), partner.end(), Vertex{0});
    for (Edge e : edges) {
        if (e.lo == e.hi)
            raise(Fault::NotAMatching, "loop at vertex " + std::to_string(e.lo));
        if (e.hi >= vertex_count)
            raise(Fault::NotAMatching, "endpoint " + std::to_string(e.hi) + " out of range");
        if (partner[e.lo] != e.lo || partner[e.hi] != e.hi)
            raise(Fault::NotAMatching, "edge " + edge_str(e) + " covers an already matched vertex");
        partner[e.lo] = e.hi;
        partner[e.hi] = e.lo;
    }
    for (Vertex v = 0; v < vertex_count; ++v)
        if (partner[v] == v)
            raise(Fault::NotAMatching, "vertex " + std::to_string(v) + " unmatched");
    return PerfectMatching{std::move(partner)};
}

PerfectMatching PerfectMatching::dimension_flip(unsigned dimension, unsigned k) {
    if (k >= dimension)
        raise(Fault::Domain, "flip bit " + std::to_string(k) + " outside dimension " +
                                 std::to_string(dimension));
    const Vertex count = Vertex{1} << dimension;
    std::vector<Vertex> partner(count);
    for (Vertex v = 0; v < count; ++v) partner[v] = v ^ (Vertex{1} << k);
    return PerfectMatching{std::move(partner)};
}

std::vector<Edge> PerfectMatching::edges() const {
    std::vector<Edge> out;
    out.reserve(partner.size() / 2);
    for (Vertex v = 0; v < size(); ++v)
        if (partner[v] > v && partner[v] < size()) out.push_back(Edge{v, partner[v]});
    return out;  // ascending because v ascends and lo == v
}

std::string MatchingViolation::describe() const {
    const std::string at = "vertex " + std::to_string(vertex);
    switch (kind) {
        case Kind::OutOfRange: return at + ": partner out of range";
        case Kind::FixedPoint: return at + ": unmatched";
        case Kind::NotInvolution: return at + ": partner map is not an involution";
        case Kind::NonEdge: return at + ": matched along a non-edge";
    }
    return at;
}

std::optional<MatchingViolation> validate_matching(const SimpleGraph& g,
                                                   const PerfectMatching& m) {
    if (m.size() != g.vertex_count())
        raise(Fault::Domain, "matching over " + std::to_string(m.size()) +
                                 " vertices checked against a graph on " +
                                 std::to_string(g.vertex_count()));
    using Kind = MatchingViolation::Kind;
    for (Vertex v = 0; v < m.size(); ++v) {
        const Vertex p = m(v);
        if (p >= m.size()) return MatchingViolation{Kind::OutOfRange, v};
        if (p == v) return MatchingViolation{Kind::FixedPoint, v};
        if (m(p) != v) return MatchingViolation{Kind::NotInvolution, v};
        if (!g.has_edge(v, p)) return MatchingViolation{Kind::NonEdge, v};
    }
    return std::nullopt;
}

Cycle canonical_cycle(const Cycle& c) {
    if (c.size() < 3) raise(Fault::Domain, "cycle needs at least three vertices");
    const std::size_t n = c.size();
    const std::size_t at =
        static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
    const Vertex fwd = c[(at + 1) % n];
    const Vertex bwd = c[(at + n - 1) % n];
    Cycle out;
    out.reserve(n);
    if (fwd <= bwd)
        for (std::size_t i = 0; i < n; ++i) out.push_back(c[(at + i) % n]);
    else
        for (std::size_t i = 0; i < n; ++i) out.push_back(c[(at + n - i) % n]);
    return out;
}

bool is_simple_cycle(const SimpleGraph& g, const Cycle& c) {
    if (c.size() < 3) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : c) {
        if (v >= g.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

EdgeList cycle_edge_set(const Cycle& c) {
    if (c.size() < 3) raise(Fault::Domain, "cycle needs at least three vertices");
    Cycle sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(Fault::Domain, "repeated vertex " +
                                 std::to_string(*std::adjacent_find(sorted.begin(), sorted.end())));
    EdgeList out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList sorted_edges(EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

EdgeList edge_intersection(const EdgeList& a, const EdgeList& b) {
    EdgeList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeList edge_union(const EdgeList& a, const EdgeList& b) {
    EdgeList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeList edge_difference(const EdgeList& a, const EdgeList& b) {
    EdgeList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CycleCover union_cycles(const SimpleGraph& g, const PerfectMatching& a,
                        const PerfectMatching& b) {
    if (auto bad = validate_matching(g, a)) raise(Fault::NotAMatching, "first: " + bad->describe());
    if (auto bad = validate_matching(g, b))
        raise(Fault::NotAMatching, "second: " + bad->describe());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (a(v) == b(v)) raise(Fault::SharedEdge, "edge " + edge_str(make_edge(v, a(v))));

    CycleCover cover;
    std::vector<bool> visited(g.vertex_count(), false);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (visited[start]) continue;
        // start is the smallest vertex of its cycle; stepping toward the
        // smaller partner first makes the traversal canonical as emitted.
        const bool a_first = a(start) < b(start);
        Cycle cycle;
        Vertex v = start;
        bool take_a = a_first;
        do {
            cycle.push_back(v);
            visited[v] = true;
            v = take_a ? a(v) : b(v);
            take_a = !take_a;
        } while (v != start);
        cover.cycles.push_back(std::move(cycle));
    }
    return cover;
}

namespace {

// Where each vertex sits in the cover: cycle index and position.
struct CoverIndex {
    std::vector<std::size_t> cycle;
    std::vector<std::size_t> pos;
};

CoverIndex index_cover(const SimpleGraph& g, const CycleCover& cover) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    CoverIndex ix{std::vector<std::size_t>(g.vertex_count(), none),
                  std::vector<std::size_t>(g.vertex_count(), none)};
    if (cover.cycles.empty()) raise(Fault::InvalidCover, "empty cover");
    for (std::size_t c = 0; c < cover.cycles.size(); ++c) {
        const Cycle& cyc = cover.cycles[c];
        if (cyc.size() < 3)
            raise(Fault::InvalidCover, "cycle " + std::to_string(c) + " has fewer than 3 vertices");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vertex v = cyc[i];
            if (v >= g.vertex_count())
                raise(Fault::InvalidCover, "vertex " + std::to_string(v) + " out of range");
            if (ix.cycle[v] != none)
                raise(Fault::InvalidCover, "vertex " + std::to_string(v) + " covered twice");
            ix.cycle[v] = c;
            ix.pos[v] = i;
            if (!g.has_edge(v, cyc[(i + 1) % cyc.size()]))
                raise(Fault::InvalidCover, "non-edge " + edge_str(make_edge(v, cyc[(i + 1) % cyc.size()])));
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (ix.cycle[v] == none)
            raise(Fault::InvalidCover, "vertex " + std::to_string(v) + " not covered");
    return ix;
}

}  // namespace

Cycle merge_cycles(const SimpleGraph& g, const CycleCover& cover, const EdgeList& markers,
                   const EdgeList& patch) {
    const CoverIndex ix = index_cover(g, cover);

    // One marker per cycle, each lying on its cycle.
    std::vector<std::size_t> marker_count(cover.cycles.size(), 0);
    std::vector<Edge> cycle_marker(cover.cycles.size());
    for (Edge m : markers) {
        const bool on_cycle = m.lo < g.vertex_count() && m.hi < g.vertex_count() &&
                              ix.cycle[m.lo] == ix.cycle[m.hi] &&
                              [&] {
                                  const Cycle& cyc = cover.cycles[ix.cycle[m.lo]];
                                  const std::size_t d =
                                      (ix.pos[m.hi] + cyc.size() - ix.pos[m.lo]) % cyc.size();
                                  return d == 1 || d == cyc.size() - 1;
                              }();
        if (!on_cycle) raise(Fault::MarkerOffCycle, "marker " + edge_str(m));
        const std::size_t c = ix.cycle[m.lo];
        if (++marker_count[c] > 1)
            raise(Fault::MultipleMarkers, "cycle " + std::to_string(c) + " holds " +
                                              edge_str(cycle_marker[c]) + " and " + edge_str(m));
        cycle_marker[c] = m;
    }
    for (std::size_t c = 0; c < cover.cycles.size(); ++c)
        if (marker_count[c] == 0)
            raise(Fault::CycleWithoutMarker, "cycle " + std::to_string(c));

    // Patch edges must be fresh: in the graph, not on any cover cycle (the
    // markers live there), not repeated.
    EdgeList cover_edges;
    for (const Cycle& cyc : cover.cycles) {
        EdgeList es = cycle_edge_set(cyc);
        cover_edges.insert(cover_edges.end(), es.begin(), es.end());
    }
    std::sort(cover_edges.begin(), cover_edges.end());
    EdgeList patch_sorted = sorted_edges(patch);
    if (std::adjacent_find(patch_sorted.begin(), patch_sorted.end()) != patch_sorted.end())
        raise(Fault::PatchOverlaps,
              "duplicate patch edge " +
                  edge_str(*std::adjacent_find(patch_sorted.begin(), patch_sorted.end())));
    if (EdgeList hit = edge_intersection(patch_sorted, cover_edges); !hit.empty())
        raise(Fault::PatchOverlaps, "patch edge " + edge_str(hit.front()) + " lies on a cover cycle");
    for (Edge e : patch_sorted)
        if (e.lo == e.hi || e.hi >= g.vertex_count() || !g.has_edge(e.lo, e.hi))
            raise(Fault::Domain, "patch edge " + edge_str(e) + " not in the graph");

    // Markers ∪ patch must close into one cycle: each marker endpoint needs
    // exactly one patch edge, nothing else may appear, and following
    // marker/patch edges alternately from any endpoint must visit them all.
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::vector<Vertex> marker_partner(g.vertex_count(), none);
    std::vector<Vertex> patch_partner(g.vertex_count(), none);
    for (Edge m : markers) {
        marker_partner[m.lo] = m.hi;  // markers are vertex-disjoint: they lie
        marker_partner[m.hi] = m.lo;  // one per cycle on disjoint cycles
    }
    for (Edge e : patch_sorted) {
        for (Vertex v : {e.lo, e.hi}) {
            if (marker_partner[v] == none)
                raise(Fault::PatchNotCycle,
                      "patch touches " + std::to_string(v) + ", not a marker endpoint");
            if (patch_partner[v] != none)
                raise(Fault::PatchNotCycle, "two patch edges at vertex " + std::to_string(v));
        }
        patch_partner[e.lo] = e.hi;
        patch_partner[e.hi] = e.lo;
    }
    if (patch_sorted.size() != markers.size())
        raise(Fault::PatchNotCycle, "patch has " + std::to_string(patch_sorted.size()) +
                                        " edges for " + std::to_string(markers.size()) +
                                        " markers");
    {
        Vertex at = markers.front().lo;
        std::size_t steps = 0;
        do {  // alternate marker, patch
            at = patch_partner[marker_partner[at]];
            ++steps;
        } while (at != markers.front().lo && steps <= markers.size());
        if (steps != markers.size())
            raise(Fault::PatchNotCycle, "markers and patch close into more than one cycle");
    }

    // Splice: walk each cycle from marker end to marker end the long way
    // round, hopping between cycles along patch edges.
    const Edge first =
        *std::min_element(markers.begin(), markers.end(),
                          [](Edge a, Edge b) { return std::min(a.lo, a.hi) < std::min(b.lo, b.hi); });
    Cycle merged;
    Vertex x = first.lo;  // lo is the smallest marker endpoint overall
    do {
        const Vertex y = marker_partner[x];
        const Cycle& cyc = cover.cycles[ix.cycle[x]];
        const std::size_t n = cyc.size();
        const std::size_t px = ix.pos[x];
        // Step away from y: y sits at px±1 (mod n); go the other way.
        const bool forward = cyc[(px + n - 1) % n] == y;
        for (std::size_t i = 0; i < n; ++i)
            merged.push_back(cyc[forward ? (px + i) % n : (px + n - i) % n]);
        x = patch_partner[y];
    } while (x != first.lo);

    return canonical_cycle(merged);
}

}  // namespace hamcube
