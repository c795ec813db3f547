#pragma once

// Arithmetic in GF(p)[w]/(w^2 + 1). For p = 3 mod 4 this is GF(p^2); for
// p = 1 mod 4 only elements with b = 0 are used, after substituting a concrete
// square root of -1 into the a part.

#include <cstdint>

#include "movegraph/modular.hpp"

namespace movegraph {

/// a + b*w with w^2 = -1.
struct gf2_element {
    residue a = 0;
    residue b = 0;
    std::uint64_t p = 3;

    static gf2_element make(std::int64_t a, std::int64_t b, std::uint64_t p);

    bool is_zero() const noexcept { return a == 0 && b == 0; }
    bool is_one() const noexcept { return a == 1 && b == 0; }

    friend bool operator==(const gf2_element&, const gf2_element&) = default;
};

gf2_element gf2_mul(const gf2_element& x, const gf2_element& y);
gf2_element gf2_pow(gf2_element x, std::uint64_t e);

/// Least e >= 1 with x^e = 1. Throws domain_error for zero or non-invertible x.
std::uint64_t gf2_order(const gf2_element& x);

}  // namespace movegraph
