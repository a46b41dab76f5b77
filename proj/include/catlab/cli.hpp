#ifndef CATLAB_CLI_HPP
#define CATLAB_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace catlab {

inline constexpr const char* kVersionTag = "catlab 0.1.0";

/// Validated batch-run configuration; one subcommand per invocation. Every
/// randomized output records (seed, version tag) and identical configs yield
/// byte-identical output regardless of the worker count.
struct RunConfig {
    std::string subcommand;
    int d = 2;
    long k = 0;
    int p = 1;
    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
    long max_trees = 10'000'000;
    long max_lp_cells = 4'000'000;
    long vertex_cap = 200'000;
    int workers = 1;
    std::string which = "phistar"; // norms: psi|phi|phistar
    bool sampled = false;
    bool exact = false; // perfect-stats: exhaustive instead of Monte-Carlo
    std::string enc;    // width-fn input tree
    std::string h_path, h_inline;
    std::string series_path, series_inline;
    std::string offspring_path, offspring_inline;
    int i = 1, j = 1, root_type = 1; // 1-based, as in the file formats
    std::vector<unsigned> alpha;
    unsigned long degree_cap = 0; // invert-oracle truncation degree
    std::string deficit;          // optional "num/den" for bounds
    std::string out_path;         // empty = stdout
    std::string format = "json";  // json|csv
    int digits = 30;              // stirling precision
    std::string cache_dir;        // catalan table cache (from env)
};

struct DispatchResult {
    int exit_code = 0;  // 0 ok; 1 domain error; 2 cap exceeded
    std::string output; // the JSON (or CSV) document
};

/// Runs one subcommand; never throws (errors become machine-readable JSON
/// error documents with the matching exit code).
DispatchResult dispatch(const RunConfig& config);

/// Writes the output to config.out_path or stdout; returns the exit code.
int dispatch_and_emit(const RunConfig& config);

} // namespace catlab

#endif
