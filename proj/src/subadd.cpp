#include "movegraph/subadd.hpp"

#include <algorithm>
#include <string>

#include "movegraph/errors.hpp"
#include "movegraph/kernels.hpp"
#include "movegraph/structure.hpp"

namespace movegraph {

namespace {

std::uint64_t side_length(unsigned r, std::uint64_t budget) {
    if (r == 0 || r > 31) throw capacity_error("level analysis needs 1 <= r <= 31, got " + std::to_string(r));
    const std::uint64_t side = std::uint64_t{1} << r;
    vertex_count(side, 2, budget);
    return side;
}

struct power_of_two_graph {
    std::uint64_t side;
    move_graph graph;
    std::vector<std::uint8_t> level;
    std::vector<std::uint32_t> in_degree;
};

power_of_two_graph analyse(unsigned r, std::uint64_t budget) {
    const auto side = side_length(r, budget);
    auto g = build(subadd_matrix(modulus(side)), budget);
    std::vector<std::uint8_t> level(g.size());
    kernels::classify_levels(r, level);
    std::vector<std::uint32_t> in_degree(g.size());
    kernels::count_in_degrees(g.successor(), in_degree);
    return {side, std::move(g), std::move(level), std::move(in_degree)};
}

}  // namespace

int_matrix subadd_integer_matrix() { return int_matrix::from_rows({{1, -1}, {1, 1}}); }

mod_matrix subadd_matrix(const modulus& n) { return subadd_integer_matrix().reduce(n); }

std::uint64_t expected_level_size(unsigned r, unsigned i) {
    if (i > 2 * r) throw domain_error("level index out of range");
    if (i == 2 * r) return 1;
    return std::uint64_t{1} << (2 * r - i - 1);
}

level_partition make_level_partition(unsigned r, std::uint64_t budget) {
    const auto side = side_length(r, budget);
    std::vector<std::uint8_t> level(side * side);
    kernels::classify_levels(r, level);
    level_partition out;
    out.r = r;
    out.levels.resize(2 * r + 1);
    for (unsigned i = 0; i <= 2 * r; ++i) out.levels[i].reserve(expected_level_size(r, i));
    for (vertex_id v = 0; v < level.size(); ++v) out.levels[level[v]].push_back(v);
    return out;
}

level_arc_report check_level_arcs(unsigned r, std::uint64_t budget) {
    const auto a = analyse(r, budget);
    const auto& g = a.graph;
    const unsigned top = 2 * r;

    level_arc_report report;
    report.r = r;

    report.child_advances = g.successor(0) == 0;
    for (vertex_id v = 1; v < g.size() && report.child_advances; ++v) {
        if (a.level[g.successor(v)] != a.level[v] + 1) report.child_advances = false;
    }

    report.parentless_is_p0 = true;
    for (vertex_id v = 0; v < g.size(); ++v) {
        if ((a.in_degree[v] == 0) != (a.level[v] == 0)) report.parentless_is_p0 = false;
    }

    if (r > 1) {
        bool two = true;
        for (vertex_id v = 0; v < g.size(); ++v) {
            if (a.level[v] != 0 && a.in_degree[v] != 2) two = false;
        }
        report.two_parents = two;
    }

    std::vector<vertex_id> origin_parents;
    for (vertex_id v = 0; v < g.size(); ++v) {
        if (g.successor(v) == 0) origin_parents.push_back(v);
    }
    report.origin_parents = origin_parents.size() == 2 && origin_parents[0] == 0 &&
                            a.level[origin_parents[1]] == top - 1;
    return report;
}

bool verify_level_arcs(unsigned r, std::uint64_t budget) { return check_level_arcs(r, budget).ok(); }

tree_report make_tree_report(unsigned r, std::uint64_t budget) {
    const auto a = analyse(r, budget);
    const auto& g = a.graph;
    const auto half = a.side / 2;

    tree_report report;
    report.r = r;
    report.vertex_count = g.size() - 1;

    // Tree arcs: every arc u -> v with u, v != (0,0).
    std::vector<vertex_id> childless;
    for (vertex_id v = 1; v < g.size(); ++v) {
        if (g.successor(v) == 0) {
            childless.push_back(v);
        } else {
            ++report.arc_count;
        }
    }
    const bool single_root = childless.size() == 1;
    report.root_vertex = single_root ? childless.front() : 0;

    // Distance to the root inside the tree; the full graph's tail length to
    // the (0,0) loop is that distance plus one.
    const auto d = decompose(g);
    bool tree_in_degrees_ok = true;
    std::uint64_t leaf_depth_min = UINT64_MAX, leaf_depth_max = 0;
    for (vertex_id v = 1; v < g.size(); ++v) {
        // in-degree within the tree: (0,0) is never a parent of a tree vertex
        const auto deg = a.in_degree[v];
        if (deg != 0 && deg != 2) tree_in_degrees_ok = false;
        if (d.tail_length[v] == 0) tree_in_degrees_ok = false;  // tree vertices must drain into (0,0)
        if (deg == 0) {
            const std::uint64_t depth = d.tail_length[v] - 1u;
            leaf_depth_min = std::min(leaf_depth_min, depth);
            leaf_depth_max = std::max(leaf_depth_max, depth);
        }
    }
    report.leaf_level_uniform = leaf_depth_min == leaf_depth_max;
    report.depth = leaf_depth_max;

    const auto expected_root = half + half * a.side;
    report.closing_arc_root = {report.root_vertex, 0};
    report.closing_arc_origin = {0, 0};
    report.closing_arcs_present = single_root && report.root_vertex == expected_root && g.successor(0) == 0;

    const bool counts_match = report.depth < 63 && report.vertex_count == (std::uint64_t{2} << report.depth) - 1 &&
                              report.arc_count == report.vertex_count - 1;
    report.is_inverted_pbt = single_root && tree_in_degrees_ok && report.leaf_level_uniform && counts_match &&
                             report.root_vertex == expected_root;
    report.depth_matches_power_formula = report.depth + 1 == a.side;
    return report;
}

odd_report verify_odd_n(std::uint64_t n, std::uint64_t budget) {
    if (n < 3 || n % 2 == 0) throw domain_error("verify_odd_n: n must be odd and >= 3, got " + std::to_string(n));
    const modulus mod(n);
    const auto g = build(subadd_matrix(mod), budget);
    const auto d = decompose(g);
    odd_report out;
    out.n = n;
    out.all_cycles = d.tail_vertex_count() == 0;
    const auto bound = 4 * euler_phi(n);
    out.max_divisor_ok = std::all_of(d.lengths.begin(), d.lengths.end(),
                                     [&](const auto& entry) { return bound % entry.first == 0; });
    const auto k = zn_order(subadd_matrix(mod));
    if (!k) throw invariant_error("sub-add matrix has no finite order modulo odd n");
    out.k = *k;
    return out;
}

mixed_report verify_mixed(std::uint64_t n1, unsigned k, std::uint64_t budget) {
    if (n1 < 3 || n1 % 2 == 0) throw domain_error("verify_mixed: n1 must be odd and >= 3");
    if (k < 1 || k > 31) throw domain_error("verify_mixed: k must be in [1, 31]");
    const std::uint64_t n2 = std::uint64_t{1} << k;
    vertex_count(n1 * n2, 2, budget);

    const auto mat = subadd_integer_matrix();
    const auto witness = tensor_iso_witness(mat, n1, n2, budget);
    const auto odd = build(mat.reduce(modulus(n1)), budget);
    const auto dyadic = build(mat.reduce(modulus(n2)), budget);
    const auto dyadic_d = decompose(dyadic);
    const auto& big = witness.codomain_successor;
    const auto v1 = odd.size();
    const auto v2 = dyadic.size();

    // Inverse of the permutation x -> M x on Z_{n1}^2.
    std::vector<vertex_id> pred(v1);
    for (vertex_id x = 0; x < v1; ++x) pred[odd.successor(x)] = x;

    std::uint32_t max_height = 0;
    for (auto h : dyadic_d.tail_length) max_height = std::max(max_height, h);
    // back[h][x] = M^-h x
    std::vector<std::vector<vertex_id>> back(max_height + 1, std::vector<vertex_id>(v1));
    for (vertex_id x = 0; x < v1; ++x) back[0][x] = x;
    for (std::uint32_t h = 1; h <= max_height; ++h) {
        for (vertex_id x = 0; x < v1; ++x) back[h][x] = pred[back[h - 1][x]];
    }

    auto member = [&](vertex_id anchor, vertex_id y) {
        const auto first = back[dyadic_d.tail_length[y]][anchor];
        return witness.vertex_map[first + v1 * y];
    };

    std::vector<std::uint8_t> covered(big.size(), 0);
    bool disjoint = true;
    std::uint64_t copies = 0;
    for (vertex_id anchor = 0; anchor < v1; ++anchor) {
        bool copy_ok = true;
        for (vertex_id y = 0; y < v2; ++y) {
            const auto u = member(anchor, y);
            if (covered[u]) disjoint = false;
            covered[u] = 1;
            if (y == 0) {
                if (big[u] != member(odd.successor(anchor), 0)) copy_ok = false;
            } else if (big[u] != member(anchor, dyadic.successor(y))) {
                copy_ok = false;
            }
        }
        if (copy_ok) ++copies;
    }
    const bool cover = std::all_of(covered.begin(), covered.end(), [](auto c) { return c != 0; });

    mixed_report out;
    out.n1 = n1;
    out.k = k;
    out.copies_found = disjoint && cover ? copies : 0;
    out.components_mixed = weak_components(decompose(big)).count;
    out.components_odd = decompose(odd).cycles.size();
    out.component_match = out.components_mixed == out.components_odd;
    return out;
}

}  // namespace movegraph
