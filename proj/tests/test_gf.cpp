#include "doctest.h"
#include "movegraph/errors.hpp"
#include "movegraph/gf.hpp"

using namespace movegraph;

namespace {

// Order by repeated multiplication with bare integers.
std::uint64_t naive_order(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t x = a, y = b, k = 1;
    while (!(x == 1 && y == 0)) {
        const std::uint64_t nx = (x * a + (p - y) * b % p) % p;
        const std::uint64_t ny = (x * b + y * a) % p;
        x = nx;
        y = ny;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("omega squares to -1") {
    const auto w = gf2_element::make(0, 1, 11);
    CHECK(gf2_mul(w, w) == gf2_element::make(-1, 0, 11));
    CHECK(gf2_pow(w, 4).is_one());
}

TEST_CASE("zero has no order") { CHECK_THROWS_AS(gf2_order(gf2_element::make(0, 0, 7)), domain_error); }

TEST_CASE("gf2_order matches naive iteration for p = 3 mod 4") {
    for (std::uint64_t p : {3u, 7u, 11u, 19u, 23u, 31u}) {
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                if (a == 0 && b == 0) continue;
                CHECK(gf2_order(gf2_element::make(a, b, p)) == naive_order(a, b, p));
            }
    }
}

TEST_CASE("property: ord(1+w) = 4 ord(-4) for p = 3 mod 4") {
    for (std::uint64_t p : {3u, 7u, 11u, 19u, 23u, 31u, 43u, 47u, 59u, 67u, 71u, 79u, 83u}) {
        const std::uint64_t minus_four = p - 4 % p;
        std::uint64_t t = 1, x = minus_four;
        while (x != 1) {
            x = x * minus_four % p;
            ++t;
        }
        CHECK(gf2_order(gf2_element::make(1, 1, p)) == 4 * t);
        CHECK(gf2_order(gf2_element::make(1, -1, p)) == 4 * t);
    }
}
