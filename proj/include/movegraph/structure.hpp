#pragma once

// Checks of the general structure results for move graphs, each done by
// exhaustive enumeration or by validating an explicit vertex map.

#include <cstdint>
#include <vector>

#include "movegraph/graph.hpp"
#include "movegraph/int_matrix.hpp"

namespace movegraph {

/// Every cycle length divides k and no vertex has a tail.
/// Throws precondition_error unless zn_order(g.matrix()) == k.
bool verify_cycle_divisibility(const move_graph& g, std::uint64_t k);

/// x and s*x lie on cycles of equal length for every on-cycle x.
/// Throws domain_error if gcd(s, n) != 1, precondition_error if M has no
/// finite Z_n-order.
bool verify_scaling_property(const move_graph& g, std::int64_t s);

/// v -> n2*v embeds Gamma_{M,n1} in Gamma_{M,n1*n2} as an induced subgraph.
bool verify_embedding(const int_matrix& mat, std::uint64_t n1, std::uint64_t n2,
                      std::uint64_t budget = kDefaultBudget);

/// Explicit isomorphism between two functional graphs.
struct iso_witness {
    std::vector<vertex_id> domain_successor;
    std::vector<vertex_id> codomain_successor;
    std::vector<vertex_id> vertex_map;

    /// vertex_map is a bijection and (u,v) is an arc of the domain iff
    /// (map u, map v) is an arc of the codomain. Exhaustive.
    bool is_valid() const;
};

/// Successor array of the tensor product G1 x G2; the pair (x, y) is the
/// vertex x + |V1| * y.
std::vector<vertex_id> tensor_product(std::span<const vertex_id> first, std::span<const vertex_id> second);

/// f(x, y) = n1*y + n2*x from Gamma_{M,n1} x Gamma_{M,n2} onto Gamma_{M,n1 n2}.
/// Throws domain_error if gcd(n1, n2) != 1 or either factor is < 2.
iso_witness tensor_iso_witness(const int_matrix& mat, std::uint64_t n1, std::uint64_t n2,
                               std::uint64_t budget = kDefaultBudget);

struct similarity_witness {
    int_matrix conjugate;  // S^-1 M1 S
    iso_witness witness;   // v -> v S^T from Gamma_{conjugate,n} to Gamma_{M1,n}
};

/// Throws domain_error when gcd(n, det S) != 1 or S^-1 M1 S is not integral.
similarity_witness similarity_iso_witness(const int_matrix& m1, const int_matrix& s, std::uint64_t n,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace movegraph
