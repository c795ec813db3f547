#include "movegraph/gf.hpp"

#include <string>
#include <vector>

#include "movegraph/errors.hpp"

namespace movegraph {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= x / q; ++q) {
        if (x % q != 0) continue;
        out.push_back(q);
        while (x % q == 0) x /= q;
    }
    if (x > 1) out.push_back(x);
    return out;
}

}  // namespace

gf2_element gf2_element::make(std::int64_t a, std::int64_t b, std::uint64_t p) {
    const modulus mod(p);
    return {mod.reduce(a), mod.reduce(b), p};
}

gf2_element gf2_mul(const gf2_element& x, const gf2_element& y) {
    if (x.p != y.p) throw contract_error("gf2_mul: operands over different primes");
    const modulus mod(x.p);
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc)w
    const auto re = mod.sub(mod.mul(x.a, y.a), mod.mul(x.b, y.b));
    const auto im = mod.add(mod.mul(x.a, y.b), mod.mul(x.b, y.a));
    return {re, im, x.p};
}

gf2_element gf2_pow(gf2_element x, std::uint64_t e) {
    gf2_element result{1, 0, x.p};
    while (e) {
        if (e & 1) result = gf2_mul(result, x);
        e >>= 1;
        if (e) x = gf2_mul(x, x);
    }
    return result;
}

std::uint64_t gf2_order(const gf2_element& x) {
    if (x.is_zero()) throw domain_error("gf2_order: zero element has no multiplicative order");
    // Every unit of GF(p)[w]/(w^2+1) has order dividing p^2 - 1; elements of
    // GF(p) itself have order dividing p - 1.
    const auto p = x.p;
    std::uint64_t order = x.b == 0 ? p - 1 : p * p - 1;
    if (!gf2_pow(x, order).is_one()) {
        throw domain_error("gf2_order: element is not invertible mod " + std::to_string(p));
    }
    for (auto q : prime_factors(order)) {
        while (order % q == 0 && gf2_pow(x, order / q).is_one()) order /= q;
    }
    return order;
}

}  // namespace movegraph
