#pragma once

// Square integer matrices, the move matrix before reduction. Exact
// determinant and adjugate are needed to conjugate by a change of basis.

#include <cstdint>
#include <string>
#include <vector>

#include "movegraph/modular.hpp"

namespace movegraph {

class int_matrix {
public:
    int_matrix(std::size_t m, std::vector<std::int64_t> entries);
    static int_matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static int_matrix identity(std::size_t m);

    std::size_t dim() const noexcept { return m_; }
    std::int64_t at(std::size_t row, std::size_t col) const { return entries_[row * m_ + col]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    mod_matrix reduce(modulus n) const;

    friend bool operator==(const int_matrix&, const int_matrix&) = default;

private:
    std::size_t m_;
    std::vector<std::int64_t> entries_;
};

int_matrix operator*(const int_matrix& a, const int_matrix& b);

/// Exact determinant (Bareiss). Throws invariant_error on int64 overflow.
std::int64_t determinant(const int_matrix& mat);

/// adj(M) with M * adj(M) = det(M) * I.
int_matrix adjugate(const int_matrix& mat);

/// S^-1 * M * S computed as adj(S) * M * S / det(S). Throws domain_error when
/// S is singular or the quotient is not integral.
int_matrix conjugate_by(const int_matrix& mat, const int_matrix& s);

/// "1,-1;1,1" style row-major text.
std::string to_string(const int_matrix& mat);

}  // namespace movegraph
