#pragma once

// Named verification suites: each runs one family of structural checks over
// a fixed, deterministic grid of inputs and records every failing case.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "movegraph/export.hpp"
#include "movegraph/int_matrix.hpp"

namespace movegraph {

struct suite_params {
    std::uint64_t n_max = 12;   // largest modulus for the general-matrix suites
    std::uint64_t p_max = 200;  // primes for the predictor cross-check
    unsigned r_max = 6;         // largest r for n = 2^r
    std::uint64_t budget = kDefaultBudget;
};

struct suite_result {
    std::string name;
    std::uint64_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// cycles, scaling, closure, embedding, tensor, similarity, kcycle, levels,
/// tree, odd, mixed, primes
const std::vector<std::string>& suite_names();

/// Throws domain_error for an unknown name.
suite_result run_suite(std::string_view name, const suite_params& params);

/// "all" expands to every suite. Report holds no timings, so it is
/// byte-identical across runs.
ordered_json run_suites(const std::vector<std::string>& names, const suite_params& params, bool& all_passed);

/// The 2x2 integer matrices with entries in [-2, 2], lexicographic.
std::vector<int_matrix> small_matrix_grid();
/// 200 evenly spaced members of small_matrix_grid().
std::vector<int_matrix> fixed_matrix_grid();

struct similarity_case {
    int_matrix m1;
    int_matrix s;
    std::uint64_t n;
};

/// 20 fixed (M1, S, n) triples with gcd(n, det S) = 1 and S^-1 M1 S integral.
std::vector<similarity_case> similarity_cases();

int_matrix perm3_matrix();

}  // namespace movegraph
