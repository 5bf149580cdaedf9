#include <iostream>

#include "CLI11.hpp"

#include "hamcube/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"orientable Hamiltonian embeddings of hypercube graphs"};
    app.require_subcommand(1);

    hamcube::cli::ConstructParams construct_params;
    CLI::App* construct = app.add_subcommand(
        "construct", "build a matching decomposition and rotation system for Q_n");
    construct->add_option("--n", construct_params.n, "dimension (power of two, 2..16)")
        ->required();
    construct->add_option("--decomposition", construct_params.decomposition_path,
                          "output decomposition path (default q<n>.decomposition)");
    construct->add_option("--rotation", construct_params.rotation_path,
                          "output rotation path (default q<n>.rotation)");

    hamcube::cli::VerifyParams verify_params;
    CLI::App* verify =
        app.add_subcommand("verify", "check a rotation file, optionally against a decomposition");
    verify->add_option("--rotation", verify_params.rotation_path, "rotation file")->required();
    verify->add_option("--decomposition", verify_params.decomposition_path,
                       "decomposition file to verify alongside");
    verify->add_option("--graph", verify_params.graph_spec,
                       "graph for general-family rotations: hypercube:<n>, complete:<n>, or an "
                       "adjacency file");
    verify->add_flag("--json", verify_params.json, "emit the JSON report");

    hamcube::cli::AnalyzeParams analyze_params;
    CLI::App* analyze =
        app.add_subcommand("analyze", "face-intersection structure of an embedding");
    analyze->add_option("--rotation", analyze_params.rotation_path, "rotation file")->required();
    analyze->add_option("--graph", analyze_params.graph_spec,
                        "graph for general-family rotations");
    analyze->add_flag("--json", analyze_params.json, "emit the JSON report");

    hamcube::cli::NecessaryParams necessary_params;
    CLI::App* necessary =
        app.add_subcommand("necessary", "counting conditions for a Hamiltonian embedding");
    necessary->add_option("--order", necessary_params.order, "graph order n")->required();
    necessary->add_option("--degree", necessary_params.degree, "regular degree d")->required();
    necessary->add_flag("--json", necessary_params.json, "emit the JSON report");

    hamcube::cli::SearchParams search_params;
    CLI::App* search =
        app.add_subcommand("search", "hunt for Hamiltonian embeddings over rotation systems");
    search
        ->add_option("--graph", search_params.graph_spec,
                     "hypercube:<n>, complete:<n>, or an adjacency file")
        ->required();
    search->add_option("--mode", search_params.mode, "exhaustive (default) or random");
    search->add_option("--budget", search_params.budget,
                       "candidate bound (exhaustive) or sample count (random)");
    search->add_option("--seed", search_params.seed, "random-mode generator seed");
    search->add_flag("--json", search_params.json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad parameters
    }

    if (app.got_subcommand(construct))
        return hamcube::cli::cmd_construct(construct_params, std::cout, std::cerr);
    if (app.got_subcommand(verify))
        return hamcube::cli::cmd_verify(verify_params, std::cout, std::cerr);
    if (app.got_subcommand(analyze))
        return hamcube::cli::cmd_analyze(analyze_params, std::cout, std::cerr);
    if (app.got_subcommand(necessary))
        return hamcube::cli::cmd_necessary(necessary_params, std::cout, std::cerr);
    if (app.got_subcommand(search))
        return hamcube::cli::cmd_search(search_params, std::cout, std::cerr);
    return 2;
}
