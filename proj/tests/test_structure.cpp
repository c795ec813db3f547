#include <numeric>

#include "doctest.h"
#include "movegraph/errors.hpp"
#include "movegraph/structure.hpp"
#include "movegraph/subadd.hpp"
#include "movegraph/verify.hpp"

using namespace movegraph;

namespace {

// The tensor product of an a-cycle and a b-cycle is gcd(a,b) cycles of
// length lcm(a,b). Applies only to permutation graphs.
spectrum tensor_spectrum(const spectrum& s1, const spectrum& s2) {
    spectrum out;
    for (auto [a, ca] : s1)
        for (auto [b, cb] : s2) out[std::lcm(a, b)] += ca * cb * std::gcd(a, b);
    return out;
}

}  // namespace

TEST_CASE("property: cycle lengths divide the Z_n-order over all 625 small matrices") {
    const auto grid = small_matrix_grid();
    REQUIRE(grid.size() == 625);
    for (std::uint64_t n : {3u, 4u, 5u, 7u}) {
        for (const auto& mat : grid) {
            const auto reduced = mat.reduce(modulus(n));
            const auto k = zn_order(reduced);
            const auto g = build(reduced);
            if (!k) {
                CHECK_THROWS_AS(verify_cycle_divisibility(g, 1), precondition_error);
                continue;
            }
            CHECK(verify_cycle_divisibility(g, *k));
            // lcm of the cycle lengths is exactly k
            std::uint64_t l = 1;
            for (auto [len, count] : decompose(g).lengths) l = std::lcm(l, len);
            CHECK(l == *k);
        }
    }
}

TEST_CASE("verify_cycle_divisibility demands the true order") {
    const auto g = build(subadd_matrix(modulus(5)));
    CHECK_THROWS_AS(verify_cycle_divisibility(g, 8), precondition_error);
    CHECK(verify_cycle_divisibility(g, 4));
}

TEST_CASE("scaling by a unit preserves cycle length") {
    const auto grid = fixed_matrix_grid();
    for (std::uint64_t n : {5u, 7u, 9u}) {
        for (const auto& mat : grid) {
            const auto g = build(mat.reduce(modulus(n)));
            if (!zn_order(g.matrix())) {
                CHECK_THROWS_AS(verify_scaling_property(g, 2), precondition_error);
                continue;
            }
            for (std::int64_t s = 1; s < static_cast<std::int64_t>(n); ++s) {
                if (std::gcd<std::uint64_t>(s, n) != 1) {
                    CHECK_THROWS_AS(verify_scaling_property(g, s), domain_error);
                } else {
                    CHECK(verify_scaling_property(g, s));
                }
            }
        }
    }
}

TEST_CASE("embedding v -> n2 v is an induced subgraph") {
    for (const auto& mat : fixed_matrix_grid())
        for (std::uint64_t n1 : {2u, 3u, 5u})
            for (std::uint64_t n2 : {2u, 3u, 4u}) CHECK(verify_embedding(mat, n1, n2));
}

TEST_CASE("tensor witness is valid and the spectrum matches the gcd/lcm rule") {
    const auto m = subadd_integer_matrix();
    for (auto [n1, n2] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 5}, {5, 7}, {3, 7}, {9, 5}, {5, 11}}) {
        const auto w = tensor_iso_witness(m, n1, n2);
        CHECK(w.is_valid());
        const auto s1 = decompose(build(m.reduce(modulus(n1)))).lengths;
        const auto s2 = decompose(build(m.reduce(modulus(n2)))).lengths;
        const auto s12 = decompose(build(m.reduce(modulus(n1 * n2)))).lengths;
        CHECK(tensor_spectrum(s1, s2) == s12);
    }
}

TEST_CASE("tensor witness on non-invertible matrices and even factors") {
    for (const auto& mat : fixed_matrix_grid()) {
        CHECK(tensor_iso_witness(mat, 2, 3).is_valid());
        CHECK(tensor_iso_witness(mat, 4, 3).is_valid());
    }
}

TEST_CASE("tensor witness rejects bad factors") {
    const auto m = subadd_integer_matrix();
    CHECK_THROWS_AS(tensor_iso_witness(m, 4, 6), domain_error);
    CHECK_THROWS_AS(tensor_iso_witness(m, 1, 5), domain_error);
}

TEST_CASE("tensor_product pairs index as x + |V1| y") {
    const std::vector<vertex_id> a{1, 0};
    const std::vector<vertex_id> b{1, 2, 2};
    const auto t = tensor_product(a, b);
    REQUIRE(t.size() == 6);
    CHECK(t[0 + 2 * 0] == 1 + 2 * 1);
    CHECK(t[1 + 2 * 2] == 0 + 2 * 2);
}

TEST_CASE("iso_witness detects a broken map") {
    iso_witness w{{1, 0}, {1, 0}, {0, 1}};
    CHECK(w.is_valid());
    w.vertex_map = {0, 0};
    CHECK_FALSE(w.is_valid());
    w = iso_witness{{0, 0}, {1, 0}, {0, 1}};
    CHECK_FALSE(w.is_valid());
}

TEST_CASE("similarity witnesses over the fixed cases") {
    const auto cases = similarity_cases();
    CHECK(cases.size() == 20);
    for (const auto& c : cases) {
        const auto sw = similarity_iso_witness(c.m1, c.s, c.n);
        CHECK(sw.witness.is_valid());
        CHECK(decompose(sw.witness.domain_successor).lengths == decompose(sw.witness.codomain_successor).lengths);
    }
}

TEST_CASE("similarity rejects det S sharing a factor with n") {
    const auto m1 = int_matrix::from_rows({{1, 1}, {2, 1}});
    const auto s = int_matrix::from_rows({{1, 0}, {0, 2}});
    CHECK_THROWS_AS(similarity_iso_witness(m1, s, 4), domain_error);
    CHECK(similarity_iso_witness(m1, s, 5).witness.is_valid());
}
