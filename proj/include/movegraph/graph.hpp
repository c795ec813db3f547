#pragma once

/**
 * @file graph.hpp
 * @brief Move graphs on Z_n^m and their cycle/in-tree decomposition.
 *
 * A vertex x = (x_1, ..., x_m) is encoded little-endian mixed radix:
 *     index = x_1 + x_2 n + ... + x_m n^(m-1).
 * The move graph has exactly one arc out of every vertex, x -> M x^T, so it
 * is a functional graph: each weak component is one directed cycle with
 * in-trees hanging off it.
 */

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "movegraph/kernels.hpp"
#include "movegraph/modular.hpp"

namespace movegraph {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Number of vertices n^m; throws capacity_error above `budget`.
std::uint64_t vertex_count(std::uint64_t n, std::size_t m, std::uint64_t budget = kDefaultBudget);

vertex_id encode(const mod_vector& x);
mod_vector decode(vertex_id v, const modulus& n, std::size_t m);

class move_graph {
public:
    move_graph(mod_matrix matrix, std::vector<vertex_id> successor);

    const mod_matrix& matrix() const noexcept { return matrix_; }
    const modulus& mod() const noexcept { return matrix_.mod(); }
    std::size_t dim() const noexcept { return matrix_.dim(); }
    std::size_t size() const noexcept { return successor_.size(); }
    std::span<const vertex_id> successor() const noexcept { return successor_; }
    vertex_id successor(vertex_id v) const { return successor_[v]; }

    friend bool operator==(const move_graph&, const move_graph&) = default;

private:
    mod_matrix matrix_;
    std::vector<vertex_id> successor_;
};

move_graph build(const mod_matrix& mat, std::uint64_t budget = kDefaultBudget);
move_graph build_serial(const mod_matrix& mat, std::uint64_t budget = kDefaultBudget);

using spectrum = std::map<std::uint64_t, std::uint64_t>;

struct decomposition {
    /// Each cycle in successor order, rotated so its smallest vertex leads;
    /// cycles sorted by that leader.
    std::vector<std::vector<vertex_id>> cycles;
    std::vector<std::uint32_t> tail_length;
    /// Index into `cycles` of the cycle each vertex's trajectory enters.
    std::vector<std::uint32_t> cycle_of;
    /// cycle length -> number of cycles of that length
    spectrum lengths;

    std::uint64_t tail_vertex_count() const noexcept;
    std::uint64_t cycle_vertex_count() const noexcept;
    std::uint64_t cycle_length_of(vertex_id v) const { return cycles[cycle_of[v]].size(); }
    bool on_cycle(vertex_id v) const { return tail_length[v] == 0; }
};

/// Works on any functional graph given as a successor array.
decomposition decompose(std::span<const vertex_id> successor);
decomposition decompose(const move_graph& g);

struct components {
    std::uint64_t count = 0;
    /// smallest vertex id in the vertex's weak component
    std::vector<vertex_id> label;
};

components weak_components(const decomposition& d);
components weak_components(const move_graph& g);

bool has_cycle_of_length(const move_graph& g, std::uint64_t length);

}  // namespace movegraph
