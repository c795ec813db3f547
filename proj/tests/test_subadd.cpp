#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "movegraph/errors.hpp"
#include "movegraph/predictor.hpp"
#include "movegraph/subadd.hpp"

using namespace movegraph;

TEST_CASE("spectra agree with the frozen independent oracle for n = 2..40") {
    std::ifstream in(std::string(MOVEGRAPH_TEST_DATA) + "/subadd_spectra.json");
    REQUIRE(in);
    const auto golden = nlohmann::json::parse(in);
    REQUIRE(golden.size() == 39);
    for (const auto& [key, expected] : golden.items()) {
        const auto n = std::stoull(key);
        const auto d = decompose(build(subadd_matrix(modulus(n))));
        spectrum want;
        for (const auto& [len, count] : expected.items()) want[std::stoull(len)] = count.get<std::uint64_t>();
        INFO("n = " << n);
        CHECK(d.lengths == want);
    }
}

TEST_CASE("hand-worked spectra") {
    CHECK(decompose(build(subadd_matrix(modulus(3)))).lengths == spectrum{{1, 1}, {8, 1}});
    CHECK(decompose(build(subadd_matrix(modulus(5)))).lengths == spectrum{{1, 1}, {2, 2}, {4, 5}});
    CHECK(decompose(build(subadd_matrix(modulus(4)))).lengths == spectrum{{1, 1}});
}

TEST_CASE("level sizes for r = 1..8") {
    for (unsigned r = 1; r <= 8; ++r) {
        const auto lp = make_level_partition(r);
        REQUIRE(lp.levels.size() == 2 * r + 1);
        std::uint64_t total = 0;
        for (unsigned i = 0; i <= 2 * r; ++i) {
            CHECK(lp.levels[i].size() == expected_level_size(r, i));
            total += lp.levels[i].size();
        }
        CHECK(total == (std::uint64_t{1} << (2 * r)));
        CHECK(lp.levels[2 * r] == std::vector<vertex_id>{0});
    }
}

TEST_CASE("level partition mod 4 by hand") {
    const auto lp = make_level_partition(2);
    // index a + 4b
    CHECK(lp.levels[0] == std::vector<vertex_id>{1, 3, 4, 6, 9, 11, 12, 14});
    CHECK(lp.levels[1] == std::vector<vertex_id>{5, 7, 13, 15});
    CHECK(lp.levels[2] == std::vector<vertex_id>{2, 8});
    CHECK(lp.levels[3] == std::vector<vertex_id>{10});
    CHECK(lp.levels[4] == std::vector<vertex_id>{0});
}

TEST_CASE("level arcs for r = 1..9") {
    for (unsigned r = 1; r <= 9; ++r) {
        const auto rep = check_level_arcs(r);
        CHECK(rep.ok());
        CHECK(rep.two_parents.has_value() == (r > 1));
    }
}

TEST_CASE("tree report") {
    for (unsigned r = 1; r <= 9; ++r) {
        const auto t = make_tree_report(r);
        const std::uint64_t side = std::uint64_t{1} << r;
        CHECK(t.is_inverted_pbt);
        CHECK(t.leaf_level_uniform);
        CHECK(t.vertex_count == side * side - 1);
        CHECK(t.arc_count == side * side - 2);
        CHECK(t.depth == 2 * r - 1);
        CHECK(t.root_vertex == side / 2 + side * (side / 2));
        CHECK(t.closing_arcs_present);
        CHECK(t.depth_matches_power_formula == (r <= 2));
    }
}

TEST_CASE("level partition limits") {
    CHECK_THROWS_AS(make_level_partition(0), capacity_error);
    CHECK_THROWS_AS(make_level_partition(12, 1000), capacity_error);
}

TEST_CASE("odd moduli are pure cycles") {
    for (std::uint64_t n = 3; n <= 61; n += 2) {
        const auto rep = verify_odd_n(n);
        CHECK(rep.all_cycles);
        CHECK(rep.max_divisor_ok);
        CHECK((4 * euler_phi(n)) % rep.k == 0);
    }
    CHECK_THROWS_AS(verify_odd_n(8), domain_error);
    CHECK_THROWS_AS(verify_odd_n(1), domain_error);
}

TEST_CASE("mixed moduli hold one tree copy per odd vertex") {
    for (std::uint64_t n1 : {3u, 5u, 7u, 9u}) {
        for (unsigned k : {1u, 2u, 3u}) {
            const auto rep = verify_mixed(n1, k);
            CHECK(rep.copies_found == n1 * n1);
            CHECK(rep.component_match);
            CHECK(rep.components_mixed == rep.components_odd);
        }
    }
}
