#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hamcube/analysis.hpp"
#include "hamcube/types.hpp"

namespace hamcube::cli {

// Exit-code contract: 0 success, 1 verification failure, 2 bad parameters,
// 3 I/O, 4 parse, 5 resource bound.
int exit_code_for(Fault f);

struct ConstructParams {
    unsigned n = 0;
    std::string decomposition_path;  // empty → q<n>.decomposition
    std::string rotation_path;       // empty → q<n>.rotation
};

struct VerifyParams {
    std::string rotation_path;
    std::string decomposition_path;  // empty = rotation-only verification
    std::string graph_spec;          // required for general-family rotations
    bool json = false;
};

struct AnalyzeParams {
    std::string rotation_path;
    std::string graph_spec;
    bool json = false;
};

struct NecessaryParams {
    std::uint64_t order = 0;
    std::uint64_t degree = 0;
    bool json = false;
};

struct SearchParams {
    std::string graph_spec;  // hypercube:<n> | complete:<n> | adjacency file path
    std::string mode = "exhaustive";
    std::uint64_t budget = kDefaultSearchBudget;
    std::uint64_t seed = 0;
    bool json = false;
};

int cmd_construct(const ConstructParams& p, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyParams& p, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeParams& p, std::ostream& out, std::ostream& err);
int cmd_necessary(const NecessaryParams& p, std::ostream& out, std::ostream& err);
int cmd_search(const SearchParams& p, std::ostream& out, std::ostream& err);

}  // namespace hamcube::cli
