#include "hamcube/hypercube.hpp"

#include <bit>

namespace hamcube {

namespace {

constexpr unsigned kMaxLabelDim = 31;   // labels are 32-bit
constexpr unsigned kMaxCountDim = 59;   // n*2^{n-1} still fits in 64 bits

void require_label_dim(unsigned n) {
    if (n > kMaxLabelDim)
        raise(Fault::Domain, "dimension " + std::to_string(n) + " exceeds 32-bit label range");
}

}  // namespace

const char* fault_name(Fault f) {
    switch (f) {
        case Fault::Domain: return "Domain";
        case Fault::Io: return "Io";
        case Fault::Parse: return "Parse";
        case Fault::SharedEdge: return "SharedEdge";
        case Fault::NotAMatching: return "NotAMatching";
        case Fault::InvalidCover: return "InvalidCover";
        case Fault::CycleWithoutMarker: return "CycleWithoutMarker";
        case Fault::MultipleMarkers: return "MultipleMarkers";
        case Fault::MarkerOffCycle: return "MarkerOffCycle";
        case Fault::PatchOverlaps: return "PatchOverlaps";
        case Fault::PatchNotCycle: return "PatchNotCycle";
        case Fault::InvalidRotation: return "InvalidRotation";
        case Fault::NonOrientableOrInvalid: return "NonOrientableOrInvalid";
        case Fault::NotPowerOfTwo: return "NotPowerOfTwo";
        case Fault::ResourceBound: return "ResourceBound";
        case Fault::ConstructionInvariantBroken: return "ConstructionInvariantBroken";
    }
    return "Unknown";
}

Hypercube::Hypercube(unsigned dimension) : dim_(dimension) {
    if (dimension < 1)
        raise(Fault::Domain, "hypercube dimension must be at least 1");
}

std::uint64_t Hypercube::vertex_count() const {
    if (dim_ > 63)
        raise(Fault::Domain, "vertex count overflows 64 bits");
    return std::uint64_t{1} << dim_;
}

bool Hypercube::contains(Vertex v) const {
    return dim_ <= kMaxLabelDim && v < (Vertex{1} << dim_);
}

Parity weight_parity(Vertex v) {
    return (std::popcount(v) & 1) ? Parity::Odd : Parity::Even;
}

std::vector<Vertex> neighbors(const Hypercube& g, Vertex v) {
    require_label_dim(g.dimension());
    if (!g.contains(v))
        raise(Fault::Domain, "label " + std::to_string(v) + " out of range for Q_" +
                                 std::to_string(g.dimension()));
    std::vector<Vertex> out;
    out.reserve(g.dimension());
    for (unsigned k = 0; k < g.dimension(); ++k)
        out.push_back(v ^ (Vertex{1} << k));
    return out;
}

GraphStats graph_stats(const Hypercube& g) {
    const unsigned n = g.dimension();
    if (n > kMaxCountDim)
        raise(Fault::Domain, "edge count overflows 64 bits at dimension " + std::to_string(n));
    return GraphStats{std::uint64_t{1} << n, std::uint64_t{n} << (n - 1), n};
}

CopyCoordinates split_label(unsigned m, Vertex v) {
    if (m < 1 || 2 * m > kMaxLabelDim)
        raise(Fault::Domain, "inner dimension " + std::to_string(m) + " out of range");
    if (v >= (Vertex{1} << (2 * m)))
        raise(Fault::Domain, "label out of range for Q_" + std::to_string(2 * m));
    return CopyCoordinates{v >> m, v & ((Vertex{1} << m) - 1)};
}

Vertex join_label(unsigned m, Vertex copy, Vertex inner) {
    if (m < 1 || 2 * m > kMaxLabelDim)
        raise(Fault::Domain, "inner dimension " + std::to_string(m) + " out of range");
    const Vertex bound = Vertex{1} << m;
    if (copy >= bound || inner >= bound)
        raise(Fault::Domain, "copy or inner label out of range for Q_" + std::to_string(m));
    return (copy << m) | inner;
}

std::vector<Edge> outside_edge_set(unsigned m, Vertex x, Vertex y, Parity endpoint_parity) {
    const Hypercube inner_cube(m);
    require_label_dim(2 * m);
    if (!inner_cube.contains(x) || !inner_cube.contains(y))
        raise(Fault::Domain, "copy label out of range for Q_" + std::to_string(m));
    if (std::popcount(x ^ y) != 1)
        raise(Fault::Domain, "copies " + std::to_string(x) + " and " + std::to_string(y) +
                                 " are not adjacent in Q_" + std::to_string(m));

    // Parity of the endpoint x·2^m + u as a vertex of the doubled cube.
    const unsigned want = static_cast<unsigned>(endpoint_parity);
    const unsigned base = std::popcount(x) & 1;
    std::vector<Edge> out;
    out.reserve(std::size_t{1} << (m - 1));
    for (Vertex u = 0; u < (Vertex{1} << m); ++u) {
        if (((base + std::popcount(u)) & 1) == want)
            out.push_back(make_edge(join_label(m, x, u), join_label(m, y, u)));
    }
    return out;
}

unsigned edge_dimension(Edge e) {
    const Vertex diff = e.lo ^ e.hi;
    if (std::popcount(diff) != 1)
        raise(Fault::Domain, "endpoints differ in more than one coordinate");
    return std::countr_zero(diff);
}

std::string to_binary(Vertex v, unsigned width) {
    if (width < 1 || width > kMaxLabelDim)
        raise(Fault::Domain, "binary width out of range");
    if (width < kMaxLabelDim && v >= (Vertex{1} << width))
        raise(Fault::Domain, "label does not fit in " + std::to_string(width) + " bits");
    std::string s(width, '0');
    for (unsigned k = 0; k < width; ++k)
        if (v & (Vertex{1} << k)) s[width - 1 - k] = '1';
    return s;
}

Vertex parse_binary(const std::string& text) {
    if (text.empty() || text.size() > kMaxLabelDim)
        raise(Fault::Parse, "bad binary label '" + text + "'");
    Vertex v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            raise(Fault::Parse, "bad binary label '" + text + "'");
        v = (v << 1) | static_cast<Vertex>(c - '0');
    }
    return v;
}

}  // namespace hamcube
