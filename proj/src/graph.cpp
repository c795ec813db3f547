#include "movegraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "movegraph/errors.hpp"

namespace movegraph {

std::uint64_t vertex_count(std::uint64_t n, std::size_t m, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (count > budget / n) {
            throw capacity_error("graph on Z_" + std::to_string(n) + "^" + std::to_string(m) +
                                 " exceeds the vertex budget of " + std::to_string(budget));
        }
        count *= n;
    }
    if (count > budget) throw capacity_error("graph exceeds the vertex budget of " + std::to_string(budget));
    return count;
}

vertex_id encode(const mod_vector& x) {
    const auto n = x.mod().value();
    vertex_id v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * n + x[i];
    return v;
}

mod_vector decode(vertex_id v, const modulus& n, std::size_t m) {
    std::vector<residue> coords(m);
    for (auto& c : coords) {
        c = v % n.value();
        v /= n.value();
    }
    if (v != 0) throw contract_error("vertex id out of range for Z_n^m");
    return {std::move(coords), n};
}

move_graph::move_graph(mod_matrix matrix, std::vector<vertex_id> successor)
    : matrix_(std::move(matrix)), successor_(std::move(successor)) {
    const auto expected = vertex_count(matrix_.mod().value(), matrix_.dim(), std::numeric_limits<std::uint64_t>::max());
    if (successor_.size() != expected) throw contract_error("successor array does not cover Z_n^m");
}

move_graph build(const mod_matrix& mat, std::uint64_t budget) {
    std::vector<vertex_id> successor(vertex_count(mat.mod().value(), mat.dim(), budget));
    kernels::fill_successors(mat, successor);
    return {mat, std::move(successor)};
}

move_graph build_serial(const mod_matrix& mat, std::uint64_t budget) {
    std::vector<vertex_id> successor(vertex_count(mat.mod().value(), mat.dim(), budget));
    kernels::fill_successors_serial(mat, successor);
    return {mat, std::move(successor)};
}

std::uint64_t decomposition::tail_vertex_count() const noexcept {
    return static_cast<std::uint64_t>(std::count_if(tail_length.begin(), tail_length.end(), [](auto t) { return t != 0; }));
}

std::uint64_t decomposition::cycle_vertex_count() const noexcept { return tail_length.size() - tail_vertex_count(); }

decomposition decompose(std::span<const vertex_id> successor) {
    enum : std::uint8_t { unvisited, in_progress, settled };
    constexpr auto no_cycle = std::numeric_limits<std::uint32_t>::max();

    const auto count = successor.size();
    std::vector<std::uint8_t> state(count, unvisited);
    decomposition d;
    d.tail_length.assign(count, 0);
    d.cycle_of.assign(count, no_cycle);

    std::vector<vertex_id> path;
    for (vertex_id start = 0; start < count; ++start) {
        if (state[start] != unvisited) continue;
        path.clear();
        vertex_id v = start;
        while (state[v] == unvisited) {
            state[v] = in_progress;
            path.push_back(v);
            v = successor[v];
        }
        // v is either on the current path (new cycle) or already settled.
        std::size_t tail_end = path.size();
        if (state[v] == in_progress) {
            tail_end = static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
            const auto id = static_cast<std::uint32_t>(d.cycles.size());
            std::vector<vertex_id> cycle(path.begin() + static_cast<std::ptrdiff_t>(tail_end), path.end());
            for (auto c : cycle) {
                state[c] = settled;
                d.tail_length[c] = 0;
                d.cycle_of[c] = id;
            }
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            d.cycles.push_back(std::move(cycle));
        }
        for (std::size_t i = tail_end; i-- > 0;) {
            const auto u = path[i];
            const auto next = successor[u];
            d.tail_length[u] = d.tail_length[next] + 1;
            d.cycle_of[u] = d.cycle_of[next];
            state[u] = settled;
        }
    }

    // Canonical order: cycles sorted by their leading (smallest) vertex.
    std::vector<std::uint32_t> order(d.cycles.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d.cycles[a].front() < d.cycles[b].front(); });
    std::vector<std::uint32_t> rank(order.size());
    std::vector<std::vector<vertex_id>> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted.push_back(std::move(d.cycles[order[i]]));
    }
    d.cycles = std::move(sorted);
    for (auto& c : d.cycle_of) c = rank[c];
    for (const auto& cycle : d.cycles) ++d.lengths[cycle.size()];
    return d;
}

decomposition decompose(const move_graph& g) { return decompose(g.successor()); }

components weak_components(const decomposition& d) {
    // Exactly one cycle per weak component of a functional graph.
    std::vector<vertex_id> smallest(d.cycles.size(), std::numeric_limits<vertex_id>::max());
    for (vertex_id v = 0; v < d.cycle_of.size(); ++v) {
        auto& s = smallest[d.cycle_of[v]];
        s = std::min(s, v);
    }
    components out;
    out.count = d.cycles.size();
    out.label.resize(d.cycle_of.size());
    for (vertex_id v = 0; v < d.cycle_of.size(); ++v) out.label[v] = smallest[d.cycle_of[v]];
    return out;
}

components weak_components(const move_graph& g) { return weak_components(decompose(g)); }

bool has_cycle_of_length(const move_graph& g, std::uint64_t length) {
    if (length < 1) throw domain_error("cycle length must be >= 1");
    const auto d = decompose(g);
    const auto it = d.lengths.find(length);
    return it != d.lengths.end() && it->second >= 1;
}

}  // namespace movegraph
