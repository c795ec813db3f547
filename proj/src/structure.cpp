#include "movegraph/structure.hpp"

#include <string>

#include "movegraph/errors.hpp"

namespace movegraph {

namespace {

std::uint64_t abs_u64(std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
}

/// vertex v of Z_n^m multiplied coordinatewise by `scale`, then read in Z_{n'}^m.
vertex_id rescale(vertex_id v, std::uint64_t n, std::size_t m, std::uint64_t scale, std::uint64_t target) {
    vertex_id out = 0;
    vertex_id place = 1;
    for (std::size_t i = 0; i < m; ++i) {
        out += ((v % n) * scale % target) * place;
        v /= n;
        place *= target;
    }
    return out;
}

}  // namespace

bool verify_cycle_divisibility(const move_graph& g, std::uint64_t k) {
    const auto order = zn_order(g.matrix());
    if (!order || *order != k) {
        throw precondition_error("verify_cycle_divisibility: k = " + std::to_string(k) +
                                 " is not the Z_n-order of the matrix");
    }
    const auto d = decompose(g);
    if (d.tail_vertex_count() != 0) return false;
    for (const auto& [length, count] : d.lengths) {
        if (k % length != 0) return false;
    }
    return true;
}

bool verify_scaling_property(const move_graph& g, std::int64_t s) {
    const auto& n = g.mod();
    const auto scale = n.reduce(s);
    if (gcd(scale, n.value()) != 1) throw domain_error("verify_scaling_property: gcd(s, n) != 1");
    if (!zn_order(g.matrix())) throw precondition_error("verify_scaling_property: matrix has no finite Z_n-order");
    const auto d = decompose(g);
    for (vertex_id x = 0; x < g.size(); ++x) {
        if (!d.on_cycle(x)) continue;
        const auto sx = rescale(x, n.value(), g.dim(), scale, n.value());
        if (d.cycle_length_of(x) != d.cycle_length_of(sx)) return false;
    }
    return true;
}

bool verify_embedding(const int_matrix& mat, std::uint64_t n1, std::uint64_t n2, std::uint64_t budget) {
    const auto small = build(mat.reduce(modulus(n1)), budget);
    const auto large_n = n1 * n2;
    const auto large = build(mat.reduce(modulus(large_n)), budget);
    const auto m = mat.dim();

    std::vector<vertex_id> image(small.size());
    std::vector<std::uint8_t> hit(large.size(), 0);
    for (vertex_id v = 0; v < small.size(); ++v) {
        image[v] = rescale(v, n1, m, n2 % large_n, large_n);
        if (hit[image[v]]) return false;  // not injective
        hit[image[v]] = 1;
    }
    // With out-degree one on both sides and an injective map, preserving every
    // arc also preserves every non-arc between image vertices.
    for (vertex_id v = 0; v < small.size(); ++v) {
        if (large.successor(image[v]) != image[small.successor(v)]) return false;
    }
    return true;
}

bool iso_witness::is_valid() const {
    const auto count = vertex_map.size();
    if (domain_successor.size() != count || codomain_successor.size() != count) return false;
    std::vector<std::uint8_t> hit(count, 0);
    for (auto target : vertex_map) {
        if (target >= count || hit[target]) return false;
        hit[target] = 1;
    }
    for (vertex_id u = 0; u < count; ++u) {
        if (codomain_successor[vertex_map[u]] != vertex_map[domain_successor[u]]) return false;
    }
    return true;
}

std::vector<vertex_id> tensor_product(std::span<const vertex_id> first, std::span<const vertex_id> second) {
    const auto n1 = first.size();
    std::vector<vertex_id> out(n1 * second.size());
    for (vertex_id y = 0; y < second.size(); ++y) {
        for (vertex_id x = 0; x < n1; ++x) out[x + n1 * y] = first[x] + n1 * second[y];
    }
    return out;
}

iso_witness tensor_iso_witness(const int_matrix& mat, std::uint64_t n1, std::uint64_t n2, std::uint64_t budget) {
    if (n1 < 2 || n2 < 2) throw domain_error("tensor_iso_witness: both moduli must be >= 2");
    if (gcd(n1, n2) != 1) throw domain_error("tensor_iso_witness: moduli are not coprime");
    const auto n = n1 * n2;
    const auto m = mat.dim();
    const auto g1 = build(mat.reduce(modulus(n1)), budget);
    const auto g2 = build(mat.reduce(modulus(n2)), budget);
    auto g = build(mat.reduce(modulus(n)), budget);

    iso_witness w;
    w.domain_successor = tensor_product(g1.successor(), g2.successor());
    w.codomain_successor.assign(g.successor().begin(), g.successor().end());
    w.vertex_map.resize(w.domain_successor.size());
    std::vector<residue> coords(m);
    for (vertex_id y = 0; y < g2.size(); ++y) {
        const auto ny = rescale(y, n2, m, n1, n);
        for (vertex_id x = 0; x < g1.size(); ++x) {
            const auto nx = rescale(x, n1, m, n2, n);
            // coordinatewise sum in Z_n of n1*y and n2*x
            vertex_id a = ny, b = nx, sum = 0, place = 1;
            for (std::size_t i = 0; i < m; ++i) {
                sum += ((a % n + b % n) % n) * place;
                a /= n;
                b /= n;
                place *= n;
            }
            w.vertex_map[x + g1.size() * y] = sum;
        }
    }
    if (!w.is_valid()) throw invariant_error("tensor witness failed validation");
    return w;
}

similarity_witness similarity_iso_witness(const int_matrix& m1, const int_matrix& s, std::uint64_t n,
                                          std::uint64_t budget) {
    if (m1.dim() != s.dim()) throw contract_error("similarity_iso_witness: dimension mismatch");
    const modulus mod(n);
    const auto det = determinant(s);
    if (det == 0) throw domain_error("similarity_iso_witness: S is singular");
    if (gcd(abs_u64(det) % n, n) != 1) throw domain_error("similarity_iso_witness: gcd(n, det S) != 1");
    auto conjugate = conjugate_by(m1, s);

    const auto domain = build(conjugate.reduce(mod), budget);
    const auto codomain = build(m1.reduce(mod), budget);
    const auto s_mod = s.reduce(mod);

    iso_witness w;
    w.domain_successor.assign(domain.successor().begin(), domain.successor().end());
    w.codomain_successor.assign(codomain.successor().begin(), codomain.successor().end());
    w.vertex_map.resize(domain.size());
    std::vector<residue> out(m1.dim());
    for (vertex_id v = 0; v < domain.size(); ++v) {
        // v S^T as a row vector is (S v^T)^T
        const auto x = decode(v, mod, m1.dim());
        mat_apply_into(s_mod, x.coords(), out);
        w.vertex_map[v] = encode(mod_vector(out, mod));
    }
    if (!w.is_valid()) throw invariant_error("similarity witness failed validation");
    return {std::move(conjugate), std::move(w)};
}

}  // namespace movegraph
