#include "movegraph/kernels.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "movegraph/errors.hpp"

namespace movegraph::kernels {

namespace {

void check_successor_size(const mod_matrix& mat, std::size_t size) {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < mat.dim(); ++i) expected *= mat.mod().value();
    if (expected != size) throw contract_error("successor span does not hold n^m entries");
}

inline void decode_into(vertex_id v, std::uint64_t n, std::span<residue> coords) noexcept {
    for (auto& c : coords) {
        c = v % n;
        v /= n;
    }
}

inline vertex_id encode_from(std::span<const residue> coords, std::uint64_t n) noexcept {
    vertex_id v = 0;
    for (std::size_t i = coords.size(); i-- > 0;) v = v * n + coords[i];
    return v;
}

}  // namespace

void fill_successors(const mod_matrix& mat, std::span<vertex_id> successor) {
    check_successor_size(mat, successor.size());
    const auto n = mat.mod().value();
    const auto m = mat.dim();
    const auto count = static_cast<std::int64_t>(successor.size());
#pragma omp parallel
    {
        std::vector<residue> x(m), y(m);
#pragma omp for schedule(static)
        for (std::int64_t v = 0; v < count; ++v) {
            decode_into(static_cast<vertex_id>(v), n, x);
            mat_apply_into(mat, x, y);
            successor[static_cast<std::size_t>(v)] = encode_from(y, n);
        }
    }
}

void fill_successors_serial(const mod_matrix& mat, std::span<vertex_id> successor) {
    check_successor_size(mat, successor.size());
    const auto n = mat.mod().value();
    std::vector<residue> x(mat.dim()), y(mat.dim());
    for (std::size_t v = 0; v < successor.size(); ++v) {
        decode_into(v, n, x);
        mat_apply_into(mat, x, y);
        successor[v] = encode_from(y, n);
    }
}

void count_in_degrees(std::span<const vertex_id> successor, std::span<std::uint32_t> in_degree) {
    if (in_degree.size() != successor.size()) throw contract_error("in_degree span size mismatch");
    std::fill(in_degree.begin(), in_degree.end(), 0u);
    const auto count = static_cast<std::int64_t>(successor.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) {
        const auto target = successor[static_cast<std::size_t>(v)];
#pragma omp atomic
        ++in_degree[target];
    }
}

void count_in_degrees_serial(std::span<const vertex_id> successor, std::span<std::uint32_t> in_degree) {
    if (in_degree.size() != successor.size()) throw contract_error("in_degree span size mismatch");
    std::fill(in_degree.begin(), in_degree.end(), 0u);
    for (auto target : successor) ++in_degree[target];
}

std::uint8_t level_of(std::uint64_t a, std::uint64_t b, unsigned r) noexcept {
    if (a == 0 && b == 0) return static_cast<std::uint8_t>(2 * r);
    // v2(0) is treated as infinite, so min(v2(a), v2(b)) is the valuation of
    // whichever coordinate is nonzero when the other vanishes.
    const auto t = static_cast<unsigned>(std::countr_zero(a | b));
    const bool both_odd = ((a >> t) & 1u) && ((b >> t) & 1u);
    return static_cast<std::uint8_t>(2 * t + (both_odd ? 1 : 0));
}

void classify_levels(unsigned r, std::span<std::uint8_t> level) {
    const std::uint64_t side = std::uint64_t{1} << r;
    if (level.size() != side * side) throw contract_error("level span does not hold 4^r entries");
    const auto count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) {
        const auto u = static_cast<std::uint64_t>(v);
        level[u] = level_of(u & (side - 1), u >> r, r);
    }
}

void classify_levels_serial(unsigned r, std::span<std::uint8_t> level) {
    const std::uint64_t side = std::uint64_t{1} << r;
    if (level.size() != side * side) throw contract_error("level span does not hold 4^r entries");
    for (std::uint64_t a = 0; a < side; ++a) {
        for (std::uint64_t b = 0; b < side; ++b) {
            // Direct parity test on (2^t x, 2^t y) normal form.
            std::uint8_t lvl;
            if (a == 0 && b == 0) {
                lvl = static_cast<std::uint8_t>(2 * r);
            } else {
                std::uint64_t x = a, y = b;
                unsigned t = 0;
                while (x % 2 == 0 && y % 2 == 0) {
                    x /= 2;
                    y /= 2;
                    ++t;
                }
                lvl = static_cast<std::uint8_t>(2 * t + ((x % 2 == 1 && y % 2 == 1) ? 1 : 0));
            }
            level[a + b * side] = lvl;
        }
    }
}

}  // namespace movegraph::kernels
