#pragma once

/**
 * @file subadd.hpp
 * @brief Structure of the sub-add move graph, M = [[1,-1],[1,1]],
 *        (a, b) -> (a - b, a + b).
 *
 * For n = 2^r the vertices split into 2r+1 levels by 2-adic valuation and
 * parity: writing a nonzero vertex as (2^t x, 2^t y) with x or y odd,
 *   level 2t     holds the vertices with exactly one of x, y odd,
 *   level 2t + 1 holds the vertices with both x, y odd,
 *   level 2r     is {(0,0)}.
 * Every move advances one level, so removing (0,0) leaves an inverted
 * perfect binary tree rooted at (2^(r-1), 2^(r-1)).
 *
 * For odd n the matrix is invertible and the graph is a union of cycles.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "movegraph/graph.hpp"
#include "movegraph/int_matrix.hpp"

namespace movegraph {

int_matrix subadd_integer_matrix();
mod_matrix subadd_matrix(const modulus& n);

struct level_partition {
    unsigned r = 0;
    /// levels[i] is P_i as sorted vertex ids, i = 0 .. 2r
    std::vector<std::vector<vertex_id>> levels;
};

/// Throws capacity_error when 4^r exceeds the budget or r is 0.
level_partition make_level_partition(unsigned r, std::uint64_t budget = kDefaultBudget);

/// |P_i| = 2^(2r-i-1) for i < 2r, |P_2r| = 1.
std::uint64_t expected_level_size(unsigned r, unsigned i);

struct level_arc_report {
    unsigned r = 0;
    bool child_advances = false;     // succ(P_i) in P_{i+1}; (0,0) fixed
    bool parentless_is_p0 = false;   // in-degree 0 exactly on P_0
    std::optional<bool> two_parents; // every vertex outside P_0 has in-degree 2; only checked for r > 1
    bool origin_parents = false;     // parents of (0,0): itself and one vertex of P_{2r-1}

    bool ok() const noexcept { return child_advances && parentless_is_p0 && two_parents.value_or(true) && origin_parents; }
};

level_arc_report check_level_arcs(unsigned r, std::uint64_t budget = kDefaultBudget);
bool verify_level_arcs(unsigned r, std::uint64_t budget = kDefaultBudget);

struct tree_report {
    unsigned r = 0;
    std::uint64_t vertex_count = 0;   // of the tree, i.e. 4^r - 1
    std::uint64_t arc_count = 0;      // arcs with both ends in the tree
    std::uint64_t depth = 0;          // measured root-to-leaf distance
    bool is_inverted_pbt = false;
    bool leaf_level_uniform = false;
    vertex_id root_vertex = 0;
    std::pair<vertex_id, vertex_id> closing_arc_root{};   // (root, (0,0))
    std::pair<vertex_id, vertex_id> closing_arc_origin{}; // ((0,0), (0,0))
    bool closing_arcs_present = false;
    /// Whether the measured depth equals 2^r - 1. True only for r <= 2.
    bool depth_matches_power_formula = false;
};

/// Analyses the subgraph of Gamma_{M,2^r} induced on all vertices but (0,0).
tree_report make_tree_report(unsigned r, std::uint64_t budget = kDefaultBudget);

struct odd_report {
    std::uint64_t n = 0;
    bool all_cycles = false;      // no tail vertices
    bool max_divisor_ok = false;  // every cycle length divides 4 phi(n)
    std::uint64_t k = 0;          // Z_n-order of M
};

/// Throws domain_error for even n or n < 3.
odd_report verify_odd_n(std::uint64_t n, std::uint64_t budget = kDefaultBudget);

struct mixed_report {
    std::uint64_t n1 = 0;
    unsigned k = 0;
    std::uint64_t copies_found = 0;
    std::uint64_t components_mixed = 0;  // weak components of Gamma_{M, n1 2^k}
    std::uint64_t components_odd = 0;    // weak components of Gamma_{M, n1}
    bool component_match = false;
};

/// Locates the copies of Gamma_{M,2^k} inside Gamma_{M,n1 2^k} through the
/// tensor witness f(x, y) = n1*y + 2^k*x. The copy anchored at a vertex x of
/// Gamma_{M,n1} holds f(M^-h(y) x, y) for every y, where h(y) is the
/// distance from y to (0,0). A copy counts when its tree arcs are exactly
/// the arcs of Gamma_{M,2^k} and its root feeds the root of the copy at M x;
/// the self-loop at (0,0) is realised by that arc and is a literal loop only
/// when x is a fixed point.
mixed_report verify_mixed(std::uint64_t n1, unsigned k, std::uint64_t budget = kDefaultBudget);

}  // namespace movegraph
