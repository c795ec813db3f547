#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "movegraph/graph.hpp"
#include "movegraph/int_matrix.hpp"

namespace movegraph::cli {

enum class command { build, analyze, levels, predict, verify, survey, oeis };
enum class format { json, dot, csv, text };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int verification = 2;
inline constexpr int capacity = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

struct run_config {
    command cmd = command::analyze;
    std::string matrix_spec;        // inline "1,-1;1,1"
    std::string preset;             // "subadd" or "perm3"
    std::optional<std::uint64_t> n;
    std::optional<unsigned> r;
    std::optional<std::uint64_t> p;
    std::uint64_t p_max = 200;
    std::uint64_t n_max = 12;
    unsigned r_max = 6;
    std::vector<std::string> suites{"all"};
    std::optional<format> output_format;
    std::optional<std::string> output_path;
    std::uint64_t size_budget = kDefaultBudget;
};

/// Thrown for malformed matrix text or missing parameters.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major "a,b;c,d" with optional whitespace and negative entries.
int_matrix parse_matrix(const std::string& text);

/// Matrix chosen by --preset or --matrix; exactly one must be given.
int_matrix resolve_matrix(const run_config& config);

/// Size budget after applying MOVEGRAPH_BUDGET, which overrides the config.
std::uint64_t effective_budget(const run_config& config);

/// Dispatches the command, writes output to `out` (or config.output_path)
/// and error text to `err`. Returns the process exit status.
int run(const run_config& config, std::ostream& out, std::ostream& err);

}  // namespace movegraph::cli
