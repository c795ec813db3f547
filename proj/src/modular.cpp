#include "movegraph/modular.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "movegraph/errors.hpp"

namespace movegraph {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kOrderCapClip = 10'000'000;

std::vector<std::uint64_t> divisors(std::uint64_t x) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            small.push_back(d);
            if (d != x / d) large.push_back(x / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_subadd_pattern(const mod_matrix& mat) {
    if (mat.dim() != 2) return false;
    const auto n = mat.mod().value();
    return mat.at(0, 0) == 1 % n && mat.at(0, 1) == n - 1 && mat.at(1, 0) == 1 % n &&
           mat.at(1, 1) == 1 % n;
}

}  // namespace

modulus::modulus(std::uint64_t n) : n_(n) {
    if (n < 2) throw domain_error("modulus must be >= 2, got " + std::to_string(n));
}

residue modulus::reduce(std::int64_t x) const noexcept {
    if (x >= 0) return static_cast<std::uint64_t>(x) % n_;
    // -(x+1) avoids overflow at INT64_MIN
    const auto neg = static_cast<std::uint64_t>(-(x + 1)) % n_;
    return n_ - 1 - neg;
}

residue modulus::add(residue a, residue b) const noexcept {
    return static_cast<residue>((static_cast<u128>(a) + b) % n_);
}

residue modulus::sub(residue a, residue b) const noexcept {
    return a >= b ? a - b : n_ - (b - a);
}

residue modulus::mul(residue a, residue b) const noexcept {
    if (n_ <= (std::uint64_t{1} << 32)) return (a * b) % n_;
    return static_cast<residue>((static_cast<u128>(a) * b) % n_);
}

residue modulus::pow(residue base, std::uint64_t e) const noexcept {
    residue result = 1 % n_;
    base %= n_;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

mod_vector::mod_vector(std::vector<residue> coords, modulus n) : coords_(std::move(coords)), n_(n) {
    for (auto c : coords_) {
        if (c >= n_.value()) throw contract_error("vector coordinate not a canonical residue");
    }
}

mod_vector mod_vector::from_integers(std::span<const std::int64_t> coords, modulus n) {
    std::vector<residue> out;
    out.reserve(coords.size());
    for (auto c : coords) out.push_back(n.reduce(c));
    return {std::move(out), n};
}

mod_vector mod_vector::zero(std::size_t m, modulus n) { return {std::vector<residue>(m, 0), n}; }

mod_matrix::mod_matrix(std::size_t m, std::vector<residue> entries, modulus n)
    : m_(m), entries_(std::move(entries)), n_(n) {
    if (m_ == 0) throw contract_error("matrix dimension must be >= 1");
    if (entries_.size() != m_ * m_) throw contract_error("matrix entry count is not m*m");
    for (auto e : entries_) {
        if (e >= n_.value()) throw contract_error("matrix entry not a canonical residue");
    }
}

mod_matrix mod_matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, modulus n) {
    const auto m = rows.size();
    std::vector<residue> entries;
    entries.reserve(m * m);
    for (const auto& row : rows) {
        if (row.size() != m) throw contract_error("matrix is not square");
        for (auto e : row) entries.push_back(n.reduce(e));
    }
    return {m, std::move(entries), n};
}

mod_matrix mod_matrix::identity(std::size_t m, modulus n) { return scalar(m, 1, n); }

mod_matrix mod_matrix::scalar(std::size_t m, residue c, modulus n) {
    std::vector<residue> entries(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) entries[i * m + i] = c % n.value();
    return {m, std::move(entries), n};
}

bool mod_matrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
            if (entries_[i * m_ + j] != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

void mat_apply_into(const mod_matrix& mat, std::span<const residue> x, std::span<residue> out) noexcept {
    const auto m = mat.dim();
    const auto& n = mat.mod();
    const auto row_major = mat.entries();
    for (std::size_t i = 0; i < m; ++i) {
        residue acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc = n.add(acc, n.mul(row_major[i * m + j], x[j]));
        out[i] = acc;
    }
}

mod_vector mat_apply(const mod_matrix& mat, const mod_vector& x) {
    if (!(mat.mod() == x.mod())) throw contract_error("mat_apply: modulus mismatch");
    if (mat.dim() != x.size()) throw contract_error("mat_apply: dimension mismatch");
    std::vector<residue> out(mat.dim());
    mat_apply_into(mat, x.coords(), out);
    return {std::move(out), mat.mod()};
}

mod_matrix mat_mul(const mod_matrix& a, const mod_matrix& b) {
    if (!(a.mod() == b.mod()) || a.dim() != b.dim()) throw contract_error("mat_mul: operand mismatch");
    const auto m = a.dim();
    const auto& n = a.mod();
    std::vector<residue> out(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const auto aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i * m + j] = n.add(out[i * m + j], n.mul(aik, b.at(k, j)));
        }
    }
    return {m, std::move(out), n};
}

mod_matrix mat_pow(const mod_matrix& mat, std::uint64_t e) {
    auto result = mod_matrix::identity(mat.dim(), mat.mod());
    auto base = mat;
    while (e) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

residue mat_det(const mod_matrix& mat) {
    const auto m = mat.dim();
    const auto& n = mat.mod();
    std::vector<residue> a(mat.entries().begin(), mat.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> residue& { return a[i * m + j]; };
    residue det = 1 % n.value();
    for (std::size_t col = 0; col < m; ++col) {
        // Euclid on the column: repeatedly subtract multiples of the smallest
        // nonzero entry until only one row below the diagonal is nonzero.
        for (;;) {
            std::size_t pivot = m;
            for (std::size_t r = col; r < m; ++r) {
                if (at(r, col) != 0 && (pivot == m || at(r, col) < at(pivot, col))) pivot = r;
            }
            if (pivot == m) return 0;
            if (pivot != col) {
                for (std::size_t j = 0; j < m; ++j) std::swap(at(pivot, j), at(col, j));
                det = n.sub(0, det);
            }
            bool cleared = true;
            for (std::size_t r = col + 1; r < m; ++r) {
                if (at(r, col) == 0) continue;
                const residue q = at(r, col) / at(col, col);
                for (std::size_t j = col; j < m; ++j) at(r, j) = n.sub(at(r, j), n.mul(q, at(col, j)));
                if (at(r, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        det = n.mul(det, at(col, col));
    }
    return det;
}

std::uint64_t default_order_cap(const mod_matrix& mat) noexcept {
    const auto n = mat.mod().value();
    const auto exponent = mat.dim() * mat.dim();
    std::uint64_t cap = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (cap > kOrderCapClip / n) return kOrderCapClip;
        cap *= n;
    }
    return std::min(cap, kOrderCapClip);
}

std::optional<std::uint64_t> zn_order(const mod_matrix& mat, std::uint64_t cap) {
    if (cap < 1) throw domain_error("zn_order: cap must be >= 1");
    const auto& n = mat.mod();
    if (gcd(mat_det(mat), n.value()) != 1) return std::nullopt;

    if (is_subadd_pattern(mat) && n.value() % 2 == 1) {
        const auto t = mult_order(n.reduce(-4), n);
        for (auto d : divisors(4 * t)) {
            if (d > cap) break;
            if (mat_pow(mat, d).is_identity()) return d;
        }
        return std::nullopt;
    }

    auto power = mat;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (power.is_identity()) return k;
        power = mat_mul(power, mat);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> zn_order(const mod_matrix& mat) { return zn_order(mat, default_order_cap(mat)); }

std::uint64_t mult_order(residue a, const modulus& n) {
    a %= n.value();
    if (gcd(a, n.value()) != 1) {
        throw domain_error("mult_order: " + std::to_string(a) + " is not a unit mod " + std::to_string(n.value()));
    }
    residue x = a;
    std::uint64_t t = 1;
    while (x != 1 % n.value()) {
        x = n.mul(x, a);
        ++t;
    }
    return t;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw domain_error("euler_phi: n must be >= 1");
    std::uint64_t result = n;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<residue> sqrt_minus_one(std::uint64_t p) {
    if (p % 2 == 0 || !is_prime(p)) throw domain_error("sqrt_minus_one: " + std::to_string(p) + " is not an odd prime");
    if (p % 4 == 3) return std::nullopt;
    const modulus mod(p);
    const residue minus_one = p - 1;
    for (residue g = 2; g < p; ++g) {
        const auto x = mod.pow(g, (p - 1) / 4);
        if (mod.mul(x, x) == minus_one) return std::min(x, p - x);
    }
    throw invariant_error("sqrt_minus_one: no root found for p = 1 mod 4");
}

}  // namespace movegraph
