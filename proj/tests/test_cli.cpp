#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "hamcube/cli.hpp"
#include "hamcube/construct.hpp"
#include "hamcube/io.hpp"

using namespace hamcube;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

template <typename Params, typename Cmd>
RunResult run(Cmd cmd, const Params& p) {
    std::ostringstream out, err;
    const int code = cmd(p, out, err);
    return {code, out.str(), err.str()};
}

// Move the first edge of matching 1 over the last edge of matching 2, the
// minimal hand corruption that keeps the file parseable.
std::string corrupt_decomposition_text(const std::string& text) {
    const std::size_t block1 = text.find("matching 1\n") + 11;
    const std::size_t stolen_end = text.find('\n', block1);
    const std::string stolen = text.substr(block1, stolen_end - block1 + 1);
    const std::size_t block3 = text.find("matching 3\n");
    const std::size_t last_line = text.rfind('\n', block3 - 2) + 1;
    std::string out = text;
    out.replace(last_line, block3 - last_line, stolen);
    return out;
}

}  // namespace

TEST_CASE("construct writes the square files and the one-line summary") {
    TempDir dir("hamcube_cli_construct");
    cli::ConstructParams p;
    p.n = 2;
    p.decomposition_path = dir.file("q2.decomposition");
    p.rotation_path = dir.file("q2.rotation");
    const auto r = run(cli::cmd_construct, p);
    CHECK(r.code == 0);
    CHECK(r.out == "Q2: f=2 genus=0 OK\n");
    CHECK(read_file(p.decomposition_path) ==
          "decomposition 2 2\nmatching 1\n00 01\n10 11\nmatching 2\n00 10\n01 11\n");
    CHECK(read_file(p.rotation_path) ==
          "rotation 2 hypercube\n00 : 01 10\n01 : 11 00\n10 : 00 11\n11 : 10 01\n");
}

TEST_CASE("construct rejects non-powers and unwritable paths") {
    TempDir dir("hamcube_cli_construct_bad");
    cli::ConstructParams p;
    p.n = 6;
    p.decomposition_path = dir.file("x.decomposition");
    p.rotation_path = dir.file("x.rotation");
    const auto r = run(cli::cmd_construct, p);
    CHECK(r.code == 2);
    CHECK(r.err.find("power of two") != std::string::npos);

    p.n = 4;
    p.decomposition_path = dir.file("missing_dir/x.decomposition");
    CHECK(run(cli::cmd_construct, p).code == 3);
}

TEST_CASE("verify accepts constructed files and reports the genus") {
    TempDir dir("hamcube_cli_verify");
    cli::ConstructParams c;
    c.n = 4;
    c.decomposition_path = dir.file("q4.decomposition");
    c.rotation_path = dir.file("q4.rotation");
    REQUIRE(run(cli::cmd_construct, c).code == 0);

    cli::VerifyParams v;
    v.rotation_path = c.rotation_path;
    SUBCASE("rotation only") {
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 0);
        CHECK(r.out.find("genus: 7\n") != std::string::npos);
        CHECK(r.out.find("f: 4\n") != std::string::npos);
        CHECK(r.out.rfind("ok\n") == r.out.size() - 3);
    }
    SUBCASE("rotation plus decomposition") {
        v.decomposition_path = c.decomposition_path;
        CHECK(run(cli::cmd_verify, v).code == 0);
    }
    SUBCASE("json document") {
        v.json = true;
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["graph"] == "hypercube:4");
        CHECK(doc["v"] == 16);
        CHECK(doc["e"] == 32);
        CHECK(doc["f"] == 4);
        CHECK(doc["genus"] == 7);
        CHECK(doc["ok"] == true);
        CHECK(doc["faces"].size() == 4);
    }
    SUBCASE("hand-corrupted decomposition trips the disjointness clause") {
        const std::string broken = dir.file("broken.decomposition");
        write_file(broken, corrupt_decomposition_text(read_file(c.decomposition_path)));
        v.decomposition_path = broken;
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL clause=matchings_disjoint") != std::string::npos);
    }
    SUBCASE("uniform rotation order fails face Hamiltonicity") {
        const std::string uniform = dir.file("uniform.rotation");
        write_file(uniform,
                   serialize_rotation_hypercube(
                       rotation_from_decomposition(construct(4), RotationConvention::Uniform), 4));
        v.rotation_path = uniform;
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL clause=faces_hamiltonian") != std::string::npos);
    }
    SUBCASE("dimension mismatch between the two files") {
        const std::string q2 = dir.file("q2.decomposition");
        write_file(q2, serialize_decomposition(construct(2)));
        v.decomposition_path = q2;
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 2);
        CHECK(r.err.find("dimension") != std::string::npos);
    }
    SUBCASE("hypercube files fix their own graph") {
        v.graph_spec = "hypercube:4";
        CHECK(run(cli::cmd_verify, v).code == 2);
    }
    SUBCASE("parse failures exit 4 with the line number") {
        const std::string truncated = dir.file("truncated.rotation");
        std::string text = read_file(c.rotation_path);
        text.erase(text.find('\n', text.find('\n') + 1) - 5, 5);  // shorten line 2's list
        write_file(truncated, text);
        v.rotation_path = truncated;
        const auto r = run(cli::cmd_verify, v);
        CHECK(r.code == 4);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("missing file exits 3") {
        v.rotation_path = dir.file("absent.rotation");
        CHECK(run(cli::cmd_verify, v).code == 3);
    }
}

TEST_CASE("verify handles general-family rotation files through --graph") {
    TempDir dir("hamcube_cli_general");
    const RotationSystem triangle{{{1, 2}, {2, 0}, {0, 1}}};
    const std::string path = dir.file("triangle.rotation");
    write_file(path, serialize_rotation_general(triangle));

    cli::VerifyParams v;
    v.rotation_path = path;
    CHECK(run(cli::cmd_verify, v).code == 2);  // no --graph

    v.graph_spec = "complete:3";
    const auto r = run(cli::cmd_verify, v);
    CHECK(r.code == 0);  // both triangle faces are Hamiltonian cycles of K_3
    CHECK(r.out.find("genus: 0\n") != std::string::npos);
}

TEST_CASE("analyze reports the intersection structure of constructed cubes") {
    TempDir dir("hamcube_cli_analyze");
    cli::ConstructParams c;
    c.n = 4;
    c.decomposition_path = dir.file("q4.decomposition");
    c.rotation_path = dir.file("q4.rotation");
    REQUIRE(run(cli::cmd_construct, c).code == 0);

    cli::AnalyzeParams a;
    a.rotation_path = c.rotation_path;
    SUBCASE("text report") {
        const auto r = run(cli::cmd_analyze, a);
        CHECK(r.code == 0);
        CHECK(r.out.find("intersection_graph_shape: cycle\n") != std::string::npos);
        CHECK(r.out.find("common_weight: 8\n") != std::string::npos);
        CHECK(r.out.find("pairwise_matching_or_empty: true\n") != std::string::npos);
        CHECK(r.out.find("shares_adjacent_edges: false\n") != std::string::npos);
        CHECK(r.out.find("cycle_with_expected_weight: true\n") != std::string::npos);
        CHECK(r.out.find("intersection 1,2: size=8 class=perfect_matching") != std::string::npos);
        CHECK(r.out.find("intersection 1,3: size=0 class=empty") != std::string::npos);
    }
    SUBCASE("json report") {
        a.json = true;
        const auto r = run(cli::cmd_analyze, a);
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["intersections"].size() == 6);
        CHECK(doc["intersection_graph_shape"] == "cycle");
        CHECK(doc["common_weight"] == 8);
        CHECK(doc["conjectures"]["pairwise_matching_or_empty"] == true);
        CHECK(doc["conjectures"]["shares_adjacent_edges"] == false);
        CHECK(doc["conjectures"]["expected_weight"] == 8);
        CHECK(doc["conjectures"]["cycle_with_expected_weight"] == true);
        CHECK(doc["ok"] == true);
    }
    SUBCASE("square analysis is reported degenerate") {
        cli::ConstructParams c2;
        c2.n = 2;
        c2.decomposition_path = dir.file("q2.decomposition");
        c2.rotation_path = dir.file("q2.rotation");
        REQUIRE(run(cli::cmd_construct, c2).code == 0);
        a.rotation_path = c2.rotation_path;
        const auto r = run(cli::cmd_analyze, a);
        CHECK(r.code == 0);
        CHECK(r.out.find("intersection_graph_shape: degenerate\n") != std::string::npos);
        CHECK(r.out.find("common_weight: 4\n") != std::string::npos);
    }
    SUBCASE("non-Hamiltonian faces stop the analysis") {
        const std::string uniform = dir.file("uniform.rotation");
        write_file(uniform,
                   serialize_rotation_hypercube(
                       rotation_from_decomposition(construct(4), RotationConvention::Uniform), 4));
        a.rotation_path = uniform;
        const auto r = run(cli::cmd_analyze, a);
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL clause=faces_hamiltonian") != std::string::npos);
    }
}

TEST_CASE("necessary prints the congruence verdict with an exact genus") {
    cli::NecessaryParams p;
    p.order = 16;
    p.degree = 4;
    const auto holds = run(cli::cmd_necessary, p);
    CHECK(holds.code == 0);
    CHECK(holds.out.find("congruence_holds: true\n") != std::string::npos);
    CHECK(holds.out.find("implied_genus: 7\n") != std::string::npos);
    CHECK(holds.out.find("implied_face_count: 4\n") != std::string::npos);

    p.order = 8;
    p.degree = 3;
    const auto fails = run(cli::cmd_necessary, p);
    CHECK(fails.code == 0);  // a negative verdict is still a successful report
    CHECK(fails.out.find("congruence_holds: false\n") != std::string::npos);
    CHECK(fails.out.find("implied_genus: 6/4\n") != std::string::npos);

    p.json = true;
    const auto doc = nlohmann::json::parse(run(cli::cmd_necessary, p).out);
    CHECK(doc["conditions"]["congruence_holds"] == false);
    CHECK(doc["conditions"]["implied_genus"] == "6/4");

    p.order = 2;
    p.degree = 1;
    CHECK(run(cli::cmd_necessary, p).code == 2);
}

TEST_CASE("search prints the exact exhaustive counts") {
    cli::SearchParams p;
    p.graph_spec = "hypercube:3";
    const auto q3 = run(cli::cmd_search, p);
    CHECK(q3.code == 0);
    CHECK(q3.out.find("candidates=256 found=0\n") != std::string::npos);
    CHECK(q3.out.find("max_hamiltonian_faces: 2\n") != std::string::npos);
    CHECK(q3.err.find("searching 256 candidates") != std::string::npos);

    p.graph_spec = "hypercube:2";
    const auto q2 = run(cli::cmd_search, p);
    CHECK(q2.code == 0);
    CHECK(q2.out.find("candidates=1 found=1\n") != std::string::npos);
    CHECK(q2.out.find("rotation 2 hypercube\n") != std::string::npos);  // the embedding itself

    p.graph_spec = "complete:4";
    CHECK(run(cli::cmd_search, p).out.find("candidates=16 found=0\n") != std::string::npos);
}

TEST_CASE("search reports an oversized space as a resource bound") {
    cli::SearchParams p;
    p.graph_spec = "hypercube:4";
    const auto r = run(cli::cmd_search, p);
    CHECK(r.code == 5);
    CHECK(r.err.find("2821109907456") != std::string::npos);
}

TEST_CASE("random search through the CLI is reproducible") {
    cli::SearchParams p;
    p.graph_spec = "hypercube:3";
    p.mode = "random";
    p.budget = 500;
    p.seed = 7;
    const auto a = run(cli::cmd_search, p);
    const auto b = run(cli::cmd_search, p);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("candidates=500 found=0\n") != std::string::npos);
    CHECK(a.out.find("seed: 7\n") != std::string::npos);

    p.json = true;
    const auto doc = nlohmann::json::parse(run(cli::cmd_search, p).out);
    CHECK(doc["search"]["mode"] == "random");
    CHECK(doc["search"]["candidates"] == 500);
    CHECK(doc["search"]["seed"] == 7);
    CHECK(doc["search"]["embeddings"].empty());
}

TEST_CASE("search accepts adjacency files and rejects bad specs") {
    TempDir dir("hamcube_cli_search_spec");
    const std::string path = dir.file("triangle.graph");
    write_file(path, serialize_adjacency(SimpleGraph::complete(3)));

    cli::SearchParams p;
    p.graph_spec = path;
    const auto r = run(cli::cmd_search, p);
    CHECK(r.code == 0);
    CHECK(r.out.find("candidates=1 found=1\n") != std::string::npos);
    CHECK(r.out.find("rotation 3 general\n") != std::string::npos);

    p.graph_spec = "hypercube:99";
    CHECK(run(cli::cmd_search, p).code == 2);
    p.graph_spec = "complete:1";
    CHECK(run(cli::cmd_search, p).code == 2);
    p.graph_spec = dir.file("absent.graph");
    CHECK(run(cli::cmd_search, p).code == 3);
    p.graph_spec = "hypercube:3";
    p.mode = "simulated-annealing";
    CHECK(run(cli::cmd_search, p).code == 2);
}

TEST_CASE("exit codes map faults to the documented contract") {
    CHECK(cli::exit_code_for(Fault::Domain) == 2);
    CHECK(cli::exit_code_for(Fault::NotPowerOfTwo) == 2);
    CHECK(cli::exit_code_for(Fault::Io) == 3);
    CHECK(cli::exit_code_for(Fault::Parse) == 4);
    CHECK(cli::exit_code_for(Fault::ResourceBound) == 5);
    CHECK(cli::exit_code_for(Fault::SharedEdge) == 1);
    CHECK(cli::exit_code_for(Fault::ConstructionInvariantBroken) == 1);
}
