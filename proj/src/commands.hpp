// Subcommand bodies for the minorperc tool. Each returns the text to emit and
// an exit code; argument parsing lives in tools/minorperc.cpp.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorperc/graph.hpp"

namespace minorperc::cli {

// Bad flags or inputs; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    std::string text;
    int exit_code = 0;
};

// Flag, then MINORPERC_SEED, then the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag);

// An existing file path is loaded; anything else is a built-in name.
Graph resolve_graph(const std::string& source);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

struct ClassifyArgs {
    int r = 2;
    std::string h;
    std::string property = "degenerate";
    std::optional<int> t_max;
    std::uint64_t budget = 50'000'000;
    std::uint64_t seed = 0;
};
CommandResult cmd_classify(const ClassifyArgs& a);

CommandResult cmd_tau(const std::string& h, std::uint64_t seed);

struct MinorArgs {
    std::string g, h;
    std::optional<int> depth;
    std::uint64_t budget = 50'000'000;
    std::uint64_t seed = 0;
};
CommandResult cmd_minor(const MinorArgs& a);

struct GenerateArgs {
    std::string family;
    std::optional<int> n;
    std::string format = "edgelist";
    bool bad_lists = false;
    std::uint64_t seed = 0;
};
CommandResult cmd_generate(const GenerateArgs& a);

CommandResult cmd_core(const std::string& g, int r, std::uint64_t seed);

struct SearchArgs {
    std::string g;
    int r = 2;
    std::uint64_t budget = 50'000'000;
    std::uint64_t seed = 0;
};
CommandResult cmd_color(const SearchArgs& a);
CommandResult cmd_choosable(const SearchArgs& a);
CommandResult cmd_regular(const SearchArgs& a);

struct PercolateArgs {
    std::string family;
    std::string n_list;
    std::optional<std::string> p_list;  // sweep mode; thresholds otherwise
    std::string property = "degenerate:r=2";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    int workers = 1;
    double tol = 1e-4;
    bool fit = false;
    std::string format = "csv";
    std::uint64_t budget = 50'000'000;
};
CommandResult cmd_percolate(const PercolateArgs& a);

struct SignatureArgs {
    std::string g;
    int r = 2;
    std::string builder = "weak";
    std::optional<std::string> collection;  // JSON file, used with builder "none"
    std::optional<int> degree_bound;
    bool verify = false;
    std::optional<int> sampled;
    std::uint64_t seed = 0;
};
CommandResult cmd_signature(const SignatureArgs& a);

CommandResult cmd_oracle_table(const std::string& h, int n_max, std::uint64_t seed);

}  // namespace minorperc::cli
