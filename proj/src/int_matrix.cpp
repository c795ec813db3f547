#include "movegraph/int_matrix.hpp"

#include <limits>

#include "movegraph/errors.hpp"

namespace movegraph {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw invariant_error("integer matrix arithmetic overflowed int64");
    }
    return static_cast<std::int64_t>(x);
}

int_matrix minor_of(const int_matrix& mat, std::size_t skip_row, std::size_t skip_col) {
    const auto m = mat.dim();
    std::vector<std::int64_t> entries;
    entries.reserve((m - 1) * (m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != skip_col) entries.push_back(mat.at(i, j));
        }
    }
    return {m - 1, std::move(entries)};
}

}  // namespace

int_matrix::int_matrix(std::size_t m, std::vector<std::int64_t> entries) : m_(m), entries_(std::move(entries)) {
    if (m_ == 0) throw contract_error("matrix dimension must be >= 1");
    if (entries_.size() != m_ * m_) throw contract_error("matrix entry count is not m*m");
}

int_matrix int_matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> entries;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw contract_error("matrix is not square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return {rows.size(), std::move(entries)};
}

int_matrix int_matrix::identity(std::size_t m) {
    std::vector<std::int64_t> entries(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) entries[i * m + i] = 1;
    return {m, std::move(entries)};
}

mod_matrix int_matrix::reduce(modulus n) const {
    std::vector<residue> out;
    out.reserve(entries_.size());
    for (auto e : entries_) out.push_back(n.reduce(e));
    return {m_, std::move(out), n};
}

int_matrix operator*(const int_matrix& a, const int_matrix& b) {
    if (a.dim() != b.dim()) throw contract_error("int_matrix product: dimension mismatch");
    const auto m = a.dim();
    std::vector<std::int64_t> out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            i128 acc = 0;
            for (std::size_t k = 0; k < m; ++k) acc += static_cast<i128>(a.at(i, k)) * b.at(k, j);
            out[i * m + j] = narrow(acc);
        }
    }
    return {m, std::move(out)};
}

std::int64_t determinant(const int_matrix& mat) {
    const auto m = mat.dim();
    std::vector<i128> a(mat.entries().begin(), mat.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> i128& { return a[i * m + j]; };
    i128 sign = 1;
    i128 prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < m && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == m) return 0;
            for (std::size_t j = 0; j < m; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
                narrow(at(i, j));
            }
        }
        prev = at(k, k);
    }
    return narrow(sign * at(m - 1, m - 1));
}

int_matrix adjugate(const int_matrix& mat) {
    const auto m = mat.dim();
    if (m == 1) return int_matrix(1, {1});
    std::vector<std::int64_t> out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto cofactor = determinant(minor_of(mat, i, j));
            // adj is the transposed cofactor matrix
            out[j * m + i] = (i + j) % 2 == 0 ? cofactor : -cofactor;
        }
    }
    return {m, std::move(out)};
}

int_matrix conjugate_by(const int_matrix& mat, const int_matrix& s) {
    const auto det = determinant(s);
    if (det == 0) throw domain_error("change of basis matrix is singular");
    const auto numerator = adjugate(s) * mat * s;
    std::vector<std::int64_t> out;
    out.reserve(numerator.entries().size());
    for (auto e : numerator.entries()) {
        if (e % det != 0) throw domain_error("S^-1 M S is not an integer matrix");
        out.push_back(e / det);
    }
    return {mat.dim(), std::move(out)};
}

std::string to_string(const int_matrix& mat) {
    std::string out;
    for (std::size_t i = 0; i < mat.dim(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < mat.dim(); ++j) {
            if (j) out += ',';
            out += std::to_string(mat.at(i, j));
        }
    }
    return out;
}

}  // namespace movegraph
