#include "hamcube/cli.hpp"

#include <charconv>
#include <functional>
#include <optional>
#include <ostream>

#include "json.hpp"

#include "hamcube/construct.hpp"
#include "hamcube/hypercube.hpp"
#include "hamcube/io.hpp"

namespace hamcube::cli {

using nlohmann::ordered_json;

int exit_code_for(Fault f) {
    switch (f) {
        case Fault::Domain:
        case Fault::NotPowerOfTwo: return 2;
        case Fault::Io: return 3;
        case Fault::Parse: return 4;
        case Fault::ResourceBound: return 5;
        default: return 1;  // verification-class faults
    }
}

namespace {

// Shared error funnel: library faults carry their exit class.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.fault());
    }
}

std::uint64_t parse_spec_number(const std::string& text) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        raise(Fault::Domain, "bad number '" + text + "' in graph spec");
    return value;
}

struct ResolvedGraph {
    SimpleGraph graph;
    std::string description;
    std::optional<unsigned> dimension;  // set for hypercube:<n>
};

ResolvedGraph resolve_graph_spec(const std::string& spec) {
    if (spec.rfind("hypercube:", 0) == 0) {
        const std::uint64_t n = parse_spec_number(spec.substr(10));
        if (n < 1 || n > 16) raise(Fault::Domain, "hypercube dimension must be 1..16");
        return {SimpleGraph::hypercube(static_cast<unsigned>(n)), spec,
                static_cast<unsigned>(n)};
    }
    if (spec.rfind("complete:", 0) == 0) {
        const std::uint64_t n = parse_spec_number(spec.substr(9));
        if (n < 2 || n > 4096) raise(Fault::Domain, "complete-graph order must be 2..4096");
        return {SimpleGraph::complete(static_cast<Vertex>(n)), spec, std::nullopt};
    }
    return {parse_adjacency(read_file(spec)), spec, std::nullopt};
}

struct LoadedRotation {
    RotationSystem rotation;
    SimpleGraph graph;
    std::string description;
    std::optional<unsigned> dimension;
};

LoadedRotation load_rotation(const std::string& rotation_path, const std::string& graph_spec) {
    ParsedRotation parsed = parse_rotation(read_file(rotation_path));
    LoadedRotation loaded;
    loaded.dimension = parsed.dimension;
    loaded.rotation = std::move(parsed.rotation);
    if (parsed.dimension) {
        if (!graph_spec.empty())
            raise(Fault::Domain, "--graph cannot override a hypercube-family rotation file");
        loaded.graph = SimpleGraph::hypercube(*parsed.dimension);
        loaded.description = "hypercube:" + std::to_string(*parsed.dimension);
    } else {
        if (graph_spec.empty())
            raise(Fault::Domain, "a general-family rotation file needs --graph");
        ResolvedGraph resolved = resolve_graph_spec(graph_spec);
        loaded.graph = std::move(resolved.graph);
        loaded.description = resolved.description;
        loaded.dimension = resolved.dimension;
    }
    return loaded;
}

ordered_json face_summaries(const SimpleGraph& g, const FaceSet& faces) {
    ordered_json list = ordered_json::array();
    for (const FaceWalk& walk : faces.walks)
        list.push_back({{"length", walk.size()}, {"hamiltonian", is_hamiltonian_face(g, walk)}});
    return list;
}

void render_faces_text(std::ostream& out, const ordered_json& faces) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        out << "face " << i + 1 << ": length=" << faces[i]["length"].get<std::uint64_t>()
            << " hamiltonian=" << (faces[i]["hamiltonian"].get<bool>() ? "yes" : "no") << "\n";
}

// Embedding summary shared by verify and analyze reports.
ordered_json embedding_document(const std::string& description, const SimpleGraph& g,
                                const FaceSet& faces) {
    ordered_json doc;
    doc["graph"] = description;
    doc["v"] = g.vertex_count();
    doc["e"] = g.edge_count();
    doc["f"] = faces.count();
    doc["genus"] = euler_genus(g.vertex_count(), g.edge_count(), faces.count());
    doc["faces"] = face_summaries(g, faces);
    return doc;
}

void render_embedding_text(std::ostream& out, const ordered_json& doc) {
    out << "graph: " << doc["graph"].get<std::string>() << "\n"
        << "v: " << doc["v"].get<std::uint64_t>() << "\n"
        << "e: " << doc["e"].get<std::uint64_t>() << "\n"
        << "f: " << doc["f"].get<std::uint64_t>() << "\n"
        << "genus: " << doc["genus"].get<std::uint64_t>() << "\n";
    render_faces_text(out, doc["faces"]);
}

void emit(std::ostream& out, bool json, const ordered_json& doc,
          const std::function<void()>& text_renderer) {
    if (json)
        out << doc.dump(2) << "\n";
    else
        text_renderer();
}

const char* kind_name(FacePairIntersection::Kind kind) {
    switch (kind) {
        case FacePairIntersection::Kind::Empty: return "empty";
        case FacePairIntersection::Kind::PerfectMatching: return "perfect_matching";
        case FacePairIntersection::Kind::Other: return "other";
    }
    return "other";
}

}  // namespace

int cmd_construct(const ConstructParams& p, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const MatchingDecomposition dec = construct(p.n);
        const RotationSystem rho =
            rotation_from_decomposition(dec, RotationConvention::ParityAlternating);
        const std::string dec_path = p.decomposition_path.empty()
                                         ? "q" + std::to_string(p.n) + ".decomposition"
                                         : p.decomposition_path;
        const std::string rot_path = p.rotation_path.empty()
                                         ? "q" + std::to_string(p.n) + ".rotation"
                                         : p.rotation_path;
        write_file(dec_path, serialize_decomposition(dec));
        write_file(rot_path, serialize_rotation_hypercube(rho, dec.dimension));

        const EmbeddingReport report =
            verify_hamiltonian_embedding(SimpleGraph::hypercube(dec.dimension), rho);
        if (!report.all_faces_hamiltonian)
            raise(Fault::ConstructionInvariantBroken, "constructed faces are not all Hamiltonian");
        out << "Q" << p.n << ": f=" << report.faces.count() << " genus=" << report.genus
            << " OK\n";
        return 0;
    });
}

int cmd_verify(const VerifyParams& p, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedRotation loaded = load_rotation(p.rotation_path, p.graph_spec);

        std::optional<MatchingDecomposition> dec;
        if (!p.decomposition_path.empty()) {
            dec = parse_decomposition(read_file(p.decomposition_path));
            if (!loaded.dimension || dec->dimension != *loaded.dimension)
                raise(Fault::Domain,
                      "decomposition dimension does not match the rotation file");
        }

        std::optional<VerificationIssue> issue;
        if (dec) {
            issue = verify_full(*dec, &loaded.rotation);
        } else if (auto bad = rotation_violation(loaded.graph, loaded.rotation)) {
            issue = VerificationIssue{"rotation_valid", *bad};
        } else {
            const FaceSet faces = trace_faces(loaded.graph, loaded.rotation);
            for (std::size_t k = 0; k < faces.count() && !issue; ++k)
                if (!is_hamiltonian_face(loaded.graph, faces.walks[k]))
                    issue = VerificationIssue{"faces_hamiltonian",
                                              "face " + std::to_string(k + 1) + " of length " +
                                                  std::to_string(faces.walks[k].size()) +
                                                  " is not Hamiltonian"};
        }

        ordered_json doc;
        const bool rotation_usable = !rotation_violation(loaded.graph, loaded.rotation);
        if (rotation_usable) {
            const FaceSet faces = trace_faces(loaded.graph, loaded.rotation);
            doc = embedding_document(loaded.description, loaded.graph, faces);
        } else {
            doc["graph"] = loaded.description;
        }
        doc["ok"] = !issue;
        if (issue) {
            doc["clause"] = issue->clause;
            doc["detail"] = issue->detail;
        }

        emit(out, p.json, doc, [&] {
            if (rotation_usable) render_embedding_text(out, doc);
            if (issue)
                out << "FAIL clause=" << issue->clause << ": " << issue->detail << "\n";
            else
                out << "ok\n";
        });
        return issue ? 1 : 0;
    });
}

int cmd_analyze(const AnalyzeParams& p, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedRotation loaded = load_rotation(p.rotation_path, p.graph_spec);
        validate_rotation(loaded.graph, loaded.rotation);
        const FaceSet faces = trace_faces(loaded.graph, loaded.rotation);

        ordered_json doc = embedding_document(loaded.description, loaded.graph, faces);
        for (std::size_t k = 0; k < faces.count(); ++k) {
            if (is_hamiltonian_face(loaded.graph, faces.walks[k])) continue;
            doc["ok"] = false;
            doc["clause"] = "faces_hamiltonian";
            doc["detail"] = "face " + std::to_string(k + 1) + " is not Hamiltonian";
            emit(out, p.json, doc, [&] {
                render_embedding_text(out, doc);
                out << "FAIL clause=faces_hamiltonian: face " << k + 1 << " is not Hamiltonian\n";
            });
            return 1;
        }

        const IntersectionProfile profile = intersection_profile(loaded.graph, faces);
        const WeightedIntersectionGraph wgraph = intersection_graph(profile);
        const IntersectionShape shape = intersection_shape(wgraph);

        ordered_json pairs = ordered_json::array();
        bool all_matching_or_empty = true;
        for (const FacePairIntersection& pair : profile.pairs) {
            pairs.push_back({{"i", pair.i},
                             {"j", pair.j},
                             {"size", pair.size},
                             {"class", kind_name(pair.classification)},
                             {"shares_adjacent_edges", pair.shares_adjacent_edges}});
            all_matching_or_empty &=
                pair.classification != FacePairIntersection::Kind::Other;
        }
        doc["intersections"] = pairs;

        const std::string shape_name = shape.degenerate ? "degenerate"
                                       : shape.single_cycle ? "cycle"
                                                            : "other";
        doc["intersection_graph_shape"] = shape_name;
        if (shape.common_weight)
            doc["common_weight"] = *shape.common_weight;
        else
            doc["common_weight"] = nullptr;

        ordered_json conjectures;
        conjectures["pairwise_matching_or_empty"] = all_matching_or_empty;
        conjectures["shares_adjacent_edges"] = profile.any_shares_adjacent_edges;
        if (loaded.dimension) {
            const std::uint64_t expected = std::uint64_t{1} << (*loaded.dimension - 1);
            conjectures["expected_weight"] = expected;
            conjectures["cycle_with_expected_weight"] =
                shape.single_cycle && shape.common_weight == expected;
        }
        doc["conjectures"] = conjectures;
        doc["ok"] = true;

        emit(out, p.json, doc, [&] {
            render_embedding_text(out, doc);
            for (std::size_t k = 0; k < profile.pairs.size(); ++k) {
                const auto& pair = profile.pairs[k];
                out << "intersection " << pair.i + 1 << "," << pair.j + 1
                    << ": size=" << pair.size << " class=" << kind_name(pair.classification)
                    << " shares_adjacent_edges=" << (pair.shares_adjacent_edges ? "yes" : "no")
                    << "\n";
            }
            out << "intersection_graph_shape: " << shape_name << "\n";
            if (shape.common_weight)
                out << "common_weight: " << *shape.common_weight << "\n";
            else
                out << "common_weight: none\n";
            out << "pairwise_matching_or_empty: "
                << (all_matching_or_empty ? "true" : "false") << "\n";
            out << "shares_adjacent_edges: "
                << (profile.any_shares_adjacent_edges ? "true" : "false") << "\n";
            if (loaded.dimension) {
                out << "expected_weight: "
                    << (std::uint64_t{1} << (*loaded.dimension - 1)) << "\n";
                out << "cycle_with_expected_weight: "
                    << (conjectures["cycle_with_expected_weight"].get<bool>() ? "true" : "false")
                    << "\n";
            }
            out << "ok\n";
        });
        return 0;
    });
}

int cmd_necessary(const NecessaryParams& p, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const NecessaryConditionReport r = necessary_conditions(p.order, p.degree);

        ordered_json conditions;
        conditions["order"] = r.order;
        conditions["degree"] = r.degree;
        conditions["congruence_holds"] = r.congruence_holds;
        conditions["clause_even_order_or_degree"] = r.clause_even_order_or_degree;
        conditions["clause_mixed_parity"] = r.clause_mixed_parity;
        conditions["clause_both_even"] = r.clause_both_even;
        conditions["implied_face_count"] = r.implied_face_count;
        if (r.implied_genus)
            conditions["implied_genus"] = *r.implied_genus;
        else  // exact rational, kept out of floating point
            conditions["implied_genus"] = std::to_string(r.genus_numerator) + "/4";
        ordered_json doc;
        doc["conditions"] = conditions;

        emit(out, p.json, doc, [&] {
            out << "order: " << r.order << "\n"
                << "degree: " << r.degree << "\n"
                << "congruence_holds: " << (r.congruence_holds ? "true" : "false") << "\n"
                << "clause_even_order_or_degree: "
                << (r.clause_even_order_or_degree ? "true" : "false") << "\n"
                << "clause_mixed_parity: " << (r.clause_mixed_parity ? "true" : "false") << "\n"
                << "clause_both_even: " << (r.clause_both_even ? "true" : "false") << "\n"
                << "implied_face_count: " << r.implied_face_count << "\n"
                << "implied_genus: ";
            if (r.implied_genus)
                out << *r.implied_genus;
            else
                out << r.genus_numerator << "/4";
            out << "\n";
        });
        return 0;
    });
}

int cmd_search(const SearchParams& p, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ResolvedGraph resolved = resolve_graph_spec(p.graph_spec);

        SearchOutcome outcome;
        if (p.mode == "exhaustive") {
            err << "searching " << rotation_space_size(resolved.graph) << " candidates\n";
            outcome = exhaustive_search(resolved.graph, p.budget, resolved.description);
        } else if (p.mode == "random") {
            err << "sampling " << p.budget << " candidates with seed " << p.seed << "\n";
            outcome = random_search(resolved.graph, p.budget, p.seed, resolved.description);
        } else {
            raise(Fault::Domain, "mode must be 'exhaustive' or 'random'");
        }

        ordered_json search;
        search["graph"] = outcome.graph;
        search["mode"] = outcome.mode == SearchOutcome::Mode::Exhaustive ? "exhaustive" : "random";
        search["candidates"] = outcome.candidates_examined;
        search["found"] = outcome.embeddings_found.size();
        search["max_hamiltonian_faces"] = outcome.max_hamiltonian_faces;
        if (outcome.mode == SearchOutcome::Mode::Random) search["seed"] = outcome.seed;
        search["budget"] = outcome.budget;
        ordered_json found = ordered_json::array();
        for (const RotationSystem& rho : outcome.embeddings_found)
            found.push_back(resolved.dimension
                                ? serialize_rotation_hypercube(rho, *resolved.dimension)
                                : serialize_rotation_general(rho));
        search["embeddings"] = found;
        ordered_json doc;
        doc["search"] = search;

        emit(out, p.json, doc, [&] {
            out << "graph: " << outcome.graph << "\n"
                << "mode: " << search["mode"].get<std::string>() << "\n"
                << "candidates=" << outcome.candidates_examined << " found="
                << outcome.embeddings_found.size() << "\n"
                << "max_hamiltonian_faces: " << outcome.max_hamiltonian_faces << "\n";
            if (outcome.mode == SearchOutcome::Mode::Random)
                out << "seed: " << outcome.seed << "\n";
            for (const auto& text : found) out << text.get<std::string>();
        });
        return 0;
    });
}

}  // namespace hamcube::cli
