#include "hamcube/io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string_view>
#include <vector>

#include "hamcube/hypercube.hpp"

namespace hamcube {

namespace {

struct Line {
    std::size_t number = 0;  // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
        ++number;
        if (!line.empty()) lines.push_back({number, line});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t at = 0;
    while (at < line.size()) {
        while (at < line.size() && line[at] == ' ') ++at;
        std::size_t end = at;
        while (end < line.size() && line[end] != ' ') ++end;
        if (end > at) tokens.push_back(line.substr(at, end - at));
        at = end;
    }
    return tokens;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    raise(Fault::Parse, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_decimal(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        parse_fail(line, "expected a number, got '" + std::string(token) + "'");
    return value;
}

Vertex parse_label_binary(std::string_view token, unsigned width, std::size_t line) {
    if (token.size() != width)
        parse_fail(line, "label '" + std::string(token) + "' is not " + std::to_string(width) +
                             " binary digits");
    Vertex value = 0;
    for (char c : token) {
        if (c != '0' && c != '1')
            parse_fail(line, "label '" + std::string(token) + "' has a non-binary digit");
        value = (value << 1) | static_cast<Vertex>(c - '0');
    }
    return value;
}

constexpr unsigned kMaxFileDimension = 16;

}  // namespace

std::string serialize_decomposition(const MatchingDecomposition& dec) {
    const unsigned n = dec.dimension;
    if (n < 1 || n > kMaxFileDimension) raise(Fault::Domain, "dimension out of file-format range");
    std::string out;
    out.reserve(64 + dec.count() * (16 + (std::size_t{1} << (n - 1)) * (2 * n + 2)));
    out += "decomposition " + std::to_string(n) + " " + std::to_string(dec.count()) + "\n";
    for (std::size_t i = 0; i < dec.count(); ++i) {
        out += "matching " + std::to_string(i + 1) + "\n";
        for (Edge e : dec.matchings[i].edges())
            out += to_binary(e.lo, n) + " " + to_binary(e.hi, n) + "\n";
    }
    return out;
}

MatchingDecomposition parse_decomposition(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) raise(Fault::Parse, "line 1: empty decomposition file");

    const auto header = split_tokens(lines[0].text);
    if (header.size() != 3 || header[0] != "decomposition")
        parse_fail(lines[0].number, "expected 'decomposition <n> <matching-count>'");
    const std::uint64_t n = parse_decimal(header[1], lines[0].number);
    const std::uint64_t count = parse_decimal(header[2], lines[0].number);
    if (n < 1 || n > kMaxFileDimension)
        parse_fail(lines[0].number, "dimension must be between 1 and 16");
    if (count < 1 || count > 256) parse_fail(lines[0].number, "matching count out of range");

    const Vertex vertices = Vertex{1} << n;
    MatchingDecomposition dec;
    dec.dimension = static_cast<unsigned>(n);

    std::size_t at = 1;
    for (std::uint64_t block = 1; block <= count; ++block) {
        if (at >= lines.size())
            parse_fail(lines.back().number, "expected 'matching " + std::to_string(block) +
                                                "' before end of file");
        const auto tag = split_tokens(lines[at].text);
        if (tag.size() != 2 || tag[0] != "matching" ||
            parse_decimal(tag[1], lines[at].number) != block)
            parse_fail(lines[at].number, "expected 'matching " + std::to_string(block) + "'");
        ++at;

        // Rebuild the partner map verbatim; semantic holes (unmatched or
        // doubly covered vertices) are verification findings, not parse errors.
        std::vector<Vertex> partner(vertices);
        std::iota(partner.begin(), partner.end(), Vertex{0});
        while (at < lines.size() && !lines[at].text.starts_with("matching")) {
            const auto tokens = split_tokens(lines[at].text);
            if (tokens.size() != 2) parse_fail(lines[at].number, "expected '<u> <v>'");
            const Vertex u =
                parse_label_binary(tokens[0], static_cast<unsigned>(n), lines[at].number);
            const Vertex v =
                parse_label_binary(tokens[1], static_cast<unsigned>(n), lines[at].number);
            partner[u] = v;
            partner[v] = u;
            ++at;
        }
        dec.matchings.push_back(PerfectMatching::from_partner(std::move(partner)));
    }
    if (at != lines.size())
        parse_fail(lines[at].number, "unexpected content after the last matching block");
    return dec;
}

namespace {

std::string serialize_rotation_lines(const RotationSystem& rho,
                                     const std::function<std::string(Vertex)>& label) {
    std::string out;
    for (Vertex v = 0; v < rho.vertex_count(); ++v) {
        out += label(v) + " :";
        for (Vertex nbr : rho.order[v]) out += " " + label(nbr);
        out += "\n";
    }
    return out;
}

}  // namespace

std::string serialize_rotation_hypercube(const RotationSystem& rho, unsigned dimension) {
    if (dimension < 1 || dimension > kMaxFileDimension)
        raise(Fault::Domain, "dimension out of file-format range");
    if (rho.vertex_count() != (Vertex{1} << dimension))
        raise(Fault::Domain, "rotation size does not match the dimension");
    for (const auto& ord : rho.order)
        if (ord.size() != dimension)
            raise(Fault::Domain, "hypercube rotation lists must have exactly n neighbors");
    std::string out;
    out.reserve(32 + rho.order.size() * (dimension + 3) * (dimension + 1));
    out += "rotation " + std::to_string(dimension) + " hypercube\n";
    out += serialize_rotation_lines(rho, [dimension](Vertex v) { return to_binary(v, dimension); });
    return out;
}

std::string serialize_rotation_general(const RotationSystem& rho) {
    std::string out = "rotation " + std::to_string(rho.vertex_count()) + " general\n";
    out += serialize_rotation_lines(rho, [](Vertex v) { return std::to_string(v); });
    return out;
}

ParsedRotation parse_rotation(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) raise(Fault::Parse, "line 1: empty rotation file");

    const auto header = split_tokens(lines[0].text);
    if (header.size() != 3 || header[0] != "rotation")
        parse_fail(lines[0].number, "expected 'rotation <n> <family>'");
    const std::uint64_t number = parse_decimal(header[1], lines[0].number);
    const std::string_view family = header[2];

    ParsedRotation parsed;
    Vertex vertices = 0;
    unsigned width = 0;
    if (family == "hypercube") {
        if (number < 1 || number > kMaxFileDimension)
            parse_fail(lines[0].number, "dimension must be between 1 and 16");
        width = static_cast<unsigned>(number);
        vertices = Vertex{1} << width;
        parsed.dimension = width;
    } else if (family == "general") {
        if (number < 1 || number > (std::uint64_t{1} << 20))
            parse_fail(lines[0].number, "vertex count out of range");
        vertices = static_cast<Vertex>(number);
    } else {
        parse_fail(lines[0].number, "unknown family '" + std::string(family) + "'");
    }

    if (lines.size() != 1 + static_cast<std::size_t>(vertices))
        raise(Fault::Parse, "line " + std::to_string(lines.back().number) + ": expected " +
                                std::to_string(vertices) + " vertex lines");

    parsed.rotation.order.resize(vertices);
    for (Vertex v = 0; v < vertices; ++v) {
        const Line& line = lines[1 + v];
        const auto tokens = split_tokens(line.text);
        if (tokens.size() < 3 || tokens[1] != ":")
            parse_fail(line.number, "expected '<vertex> : <neighbors...>'");
        const Vertex labeled = parsed.dimension
                                   ? parse_label_binary(tokens[0], width, line.number)
                                   : static_cast<Vertex>(parse_decimal(tokens[0], line.number));
        if (labeled != v)
            parse_fail(line.number, "vertex lines must be complete and ascending; expected " +
                                        (parsed.dimension ? to_binary(v, width)
                                                          : std::to_string(v)));
        if (parsed.dimension && tokens.size() != 2 + width)
            parse_fail(line.number, "expected exactly " + std::to_string(width) + " neighbors");
        auto& ord = parsed.rotation.order[v];
        ord.reserve(tokens.size() - 2);
        for (std::size_t t = 2; t < tokens.size(); ++t) {
            const std::uint64_t nbr =
                parsed.dimension
                    ? parse_label_binary(tokens[t], width, line.number)
                    : parse_decimal(tokens[t], line.number);
            if (nbr >= vertices) parse_fail(line.number, "neighbor label out of range");
            ord.push_back(static_cast<Vertex>(nbr));
        }
    }
    return parsed;
}

std::string serialize_adjacency(const SimpleGraph& g) {
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out += std::to_string(v) + " :";
        for (Vertex nbr : g.neighbors(v)) out += " " + std::to_string(nbr);
        out += "\n";
    }
    return out;
}

SimpleGraph parse_adjacency(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) raise(Fault::Parse, "line 1: empty graph file");

    const auto header = split_tokens(lines[0].text);
    if (header.size() != 2 || header[0] != "graph")
        parse_fail(lines[0].number, "expected 'graph <vertex-count>'");
    const std::uint64_t count = parse_decimal(header[1], lines[0].number);
    if (count < 1 || count > (std::uint64_t{1} << 20))
        parse_fail(lines[0].number, "vertex count out of range");
    if (lines.size() != 1 + count)
        raise(Fault::Parse, "line " + std::to_string(lines.back().number) + ": expected " +
                                std::to_string(count) + " vertex lines");

    std::vector<std::vector<Vertex>> adjacency(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        const Line& line = lines[1 + v];
        const auto tokens = split_tokens(line.text);
        if (tokens.size() < 2 || tokens[1] != ":")
            parse_fail(line.number, "expected '<vertex> : <neighbors...>'");
        if (parse_decimal(tokens[0], line.number) != v)
            parse_fail(line.number,
                       "vertex lines must be complete and ascending; expected " +
                           std::to_string(v));
        for (std::size_t t = 2; t < tokens.size(); ++t) {
            const std::uint64_t nbr = parse_decimal(tokens[t], line.number);
            if (nbr >= count) parse_fail(line.number, "neighbor label out of range");
            adjacency[v].push_back(static_cast<Vertex>(nbr));
        }
    }
    try {
        return SimpleGraph::from_adjacency(std::move(adjacency));
    } catch (const Error& e) {
        raise(Fault::Parse, std::string("adjacency lists invalid: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Fault::Io, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) raise(Fault::Io, "read failure on '" + path + "'");
    return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Fault::Io, "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out.good()) raise(Fault::Io, "write failure on '" + path + "'");
}

}  // namespace hamcube
