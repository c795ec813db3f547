#pragma once

/**
 * @file modular.hpp
 * @brief Exact arithmetic over Z_n: residues, vectors, square matrices.
 *
 * Every stored value is a canonical residue in [0, n). Products are formed
 * in a width at least twice that of the modulus and reduced immediately, so
 * no operation can overflow for any modulus representable as uint64.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace movegraph {

using residue = std::uint64_t;

/// A modulus n >= 2.
class modulus {
public:
    explicit modulus(std::uint64_t n);

    std::uint64_t value() const noexcept { return n_; }

    /// Canonical representative of an arbitrary signed integer.
    residue reduce(std::int64_t x) const noexcept;

    residue add(residue a, residue b) const noexcept;
    residue sub(residue a, residue b) const noexcept;
    residue mul(residue a, residue b) const noexcept;
    residue pow(residue base, std::uint64_t e) const noexcept;

    friend bool operator==(const modulus&, const modulus&) = default;

private:
    std::uint64_t n_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

class mod_vector {
public:
    mod_vector(std::vector<residue> coords, modulus n);
    static mod_vector from_integers(std::span<const std::int64_t> coords, modulus n);
    static mod_vector zero(std::size_t m, modulus n);

    std::size_t size() const noexcept { return coords_.size(); }
    const modulus& mod() const noexcept { return n_; }
    residue operator[](std::size_t i) const { return coords_[i]; }
    std::span<const residue> coords() const noexcept { return coords_; }

    friend bool operator==(const mod_vector&, const mod_vector&) = default;

private:
    std::vector<residue> coords_;
    modulus n_;
};

/// m x m matrix over Z_n, stored row-major.
class mod_matrix {
public:
    mod_matrix(std::size_t m, std::vector<residue> entries, modulus n);

    /// Rows of signed integers; negative entries are canonicalized.
    static mod_matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, modulus n);
    static mod_matrix identity(std::size_t m, modulus n);
    static mod_matrix scalar(std::size_t m, residue c, modulus n);

    std::size_t dim() const noexcept { return m_; }
    const modulus& mod() const noexcept { return n_; }
    residue at(std::size_t row, std::size_t col) const { return entries_[row * m_ + col]; }
    std::span<const residue> entries() const noexcept { return entries_; }

    bool is_identity() const noexcept;

    friend bool operator==(const mod_matrix&, const mod_matrix&) = default;

private:
    std::size_t m_;
    std::vector<residue> entries_;
    modulus n_;
};

mod_vector mat_apply(const mod_matrix& mat, const mod_vector& x);

/// Allocation-free variant used by the graph kernels. `out` must not alias `x`.
void mat_apply_into(const mod_matrix& mat, std::span<const residue> x, std::span<residue> out) noexcept;

mod_matrix mat_mul(const mod_matrix& a, const mod_matrix& b);
mod_matrix mat_pow(const mod_matrix& mat, std::uint64_t e);

/// Determinant modulo n. Uses Euclidean row reduction, valid for composite n.
residue mat_det(const mod_matrix& mat);

/// Default search cap for zn_order: n^(m*m), clipped to 10^7.
std::uint64_t default_order_cap(const mod_matrix& mat) noexcept;

/// Least k in [1, cap] with M^k = I, or nullopt. Returns nullopt at once when
/// gcd(det M, n) != 1. For the sub-add pattern [[1,-1],[1,1]] with odd n only
/// divisors of 4 * ord(-4 mod n) are tried.
std::optional<std::uint64_t> zn_order(const mod_matrix& mat, std::uint64_t cap);
std::optional<std::uint64_t> zn_order(const mod_matrix& mat);

/// Least t >= 1 with a^t = 1 mod n. Throws domain_error if gcd(a, n) != 1.
std::uint64_t mult_order(residue a, const modulus& n);

std::uint64_t euler_phi(std::uint64_t n);

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Smaller square root of -1 mod p, or nullopt for p = 3 mod 4.
/// Throws domain_error unless p is an odd prime.
std::optional<residue> sqrt_minus_one(std::uint64_t p);

}  // namespace movegraph
