#include <cstdlib>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "movegraph/cli.hpp"

using namespace movegraph;
using namespace movegraph::cli;

namespace {

struct outcome {
    int status;
    std::string out;
    std::string err;
};

outcome invoke(const run_config& config) {
    std::ostringstream out, err;
    const int status = run(config, out, err);
    return {status, out.str(), err.str()};
}

run_config analyze(std::string preset, std::uint64_t n) {
    run_config c;
    c.cmd = command::analyze;
    c.preset = std::move(preset);
    c.n = n;
    return c;
}

}  // namespace

TEST_CASE("parse_matrix") {
    CHECK(parse_matrix("1,-1;1,1") == int_matrix::from_rows({{1, -1}, {1, 1}}));
    CHECK(parse_matrix(" 2 , 0 ; 0 , 3 ") == int_matrix::from_rows({{2, 0}, {0, 3}}));
    CHECK_THROWS_AS(parse_matrix("1,2;3"), usage_error);
    CHECK_THROWS_AS(parse_matrix("1,x;1,1"), usage_error);
    CHECK_THROWS_AS(parse_matrix(""), usage_error);
    CHECK_THROWS_AS(parse_matrix("1,,2;3,4"), usage_error);
}

TEST_CASE("analyze the sub-add graph mod 5") {
    const auto r = invoke(analyze("subadd", 5));
    REQUIRE(r.status == exit_code::ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["spectrum"].dump() == R"({"1":1,"2":2,"4":5})");
    CHECK(doc["components"] == 8);
    CHECK(doc["tail_vertices"] == 0);
    CHECK(doc["zn_order"] == 4);
}

TEST_CASE("analyze mod 8 has tails and no order") {
    const auto r = invoke(analyze("subadd", 8));
    REQUIRE(r.status == exit_code::ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["zn_order"].is_null());
    CHECK(doc["tail_vertices"] == 63);
}

TEST_CASE("DOT export of the 3-cycle permutation mod 3 has 27 nodes and 27 arcs") {
    auto c = analyze("perm3", 3);
    c.cmd = command::build;
    c.output_format = format::dot;
    const auto r = invoke(c);
    REQUIRE(r.status == exit_code::ok);
    std::istringstream in(r.out);
    std::string line;
    std::size_t arcs = 0;
    std::set<std::string> nodes;
    while (std::getline(in, line)) {
        const auto arrow = line.find(" -> ");
        if (arrow == std::string::npos) continue;
        ++arcs;
        nodes.insert(line.substr(0, arrow));
    }
    CHECK(arcs == 27);
    CHECK(nodes.size() == 27);
}

TEST_CASE("exit codes") {
    SUBCASE("missing modulus is a usage error") {
        run_config c;
        c.cmd = command::analyze;
        c.preset = "subadd";
        CHECK(invoke(c).status == exit_code::usage);
    }
    SUBCASE("both matrix and preset") {
        auto c = analyze("subadd", 5);
        c.matrix_spec = "1,0;0,1";
        CHECK(invoke(c).status == exit_code::usage);
    }
    SUBCASE("modulus 1 is a domain error") { CHECK(invoke(analyze("subadd", 1)).status == exit_code::domain); }
    SUBCASE("composite p is a domain error") {
        run_config c;
        c.cmd = command::predict;
        c.p = 15;
        const auto r = invoke(c);
        CHECK(r.status == exit_code::domain);
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("budget exceeded is a capacity error") {
        auto c = analyze("subadd", 100);
        c.size_budget = 9999;
        CHECK(invoke(c).status == exit_code::capacity);
    }
    SUBCASE("unknown suite is a domain error") {
        run_config c;
        c.cmd = command::verify;
        c.suites = {"nope"};
        CHECK(invoke(c).status == exit_code::domain);
    }
    SUBCASE("unsupported format is a usage error") {
        auto c = analyze("subadd", 5);
        c.output_format = format::csv;
        CHECK(invoke(c).status == exit_code::usage);
    }
}

TEST_CASE("MOVEGRAPH_BUDGET overrides the configured budget") {
    auto c = analyze("subadd", 100);
    ::setenv("MOVEGRAPH_BUDGET", "500", 1);
    CHECK(effective_budget(c) == 500);
    CHECK(invoke(c).status == exit_code::capacity);
    ::setenv("MOVEGRAPH_BUDGET", "junk", 1);
    CHECK(invoke(c).status == exit_code::usage);
    ::unsetenv("MOVEGRAPH_BUDGET");
    CHECK(invoke(c).status == exit_code::ok);
}

TEST_CASE("levels and predict succeed") {
    run_config c;
    c.cmd = command::levels;
    c.r = 4;
    const auto r = invoke(c);
    CHECK(r.status == exit_code::ok);
    CHECK(nlohmann::json::parse(r.out)["level_arcs_ok"] == true);
    c.cmd = command::predict;
    c.p = 13;
    CHECK(invoke(c).status == exit_code::ok);
}

TEST_CASE("verify output is deterministic") {
    run_config c;
    c.cmd = command::verify;
    c.n_max = 6;
    c.p_max = 50;
    c.r_max = 4;
    const auto a = invoke(c);
    const auto b = invoke(c);
    CHECK(a.status == exit_code::ok);
    CHECK(a.out == b.out);
}

TEST_CASE("oeis prints one term per line") {
    run_config c;
    c.cmd = command::oeis;
    c.n_max = 6;
    CHECK(invoke(c).out == "1\n1\n2\n1\n8\n2\n");
}
