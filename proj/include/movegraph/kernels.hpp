#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference; both write the same output bit for bit. The serial versions are
// kept for the test suite and the benchmark, not for production use.

#include <cstdint>
#include <span>

#include "movegraph/modular.hpp"

namespace movegraph {

using vertex_id = std::uint64_t;

namespace kernels {

/// successor[v] = encode(M * decode(v)) over all n^m vertices.
void fill_successors(const mod_matrix& mat, std::span<vertex_id> successor);
void fill_successors_serial(const mod_matrix& mat, std::span<vertex_id> successor);

/// in_degree[v] = #{u : successor[u] = v}.
void count_in_degrees(std::span<const vertex_id> successor, std::span<std::uint32_t> in_degree);
void count_in_degrees_serial(std::span<const vertex_id> successor, std::span<std::uint32_t> in_degree);

/// 2-adic level of every vertex (a, b) of Z_{2^r}^2, index a + b * 2^r.
void classify_levels(unsigned r, std::span<std::uint8_t> level);
void classify_levels_serial(unsigned r, std::span<std::uint8_t> level);

/// Level of one pair; 2r for (0,0).
std::uint8_t level_of(std::uint64_t a, std::uint64_t b, unsigned r) noexcept;

}  // namespace kernels

}  // namespace movegraph
