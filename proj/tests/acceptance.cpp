// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// against its limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "movegraph/errors.hpp"
#include "movegraph/predictor.hpp"
#include "movegraph/structure.hpp"
#include "movegraph/subadd.hpp"
#include "movegraph/verify.hpp"

using namespace movegraph;

namespace {

struct criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<std::string()> check;  // empty string on success, else the first failure
};

std::string first_failure;

bool expect(bool ok, const std::string& what) {
    if (!ok && first_failure.empty()) first_failure = what;
    return ok;
}

spectrum subadd_spectrum(std::uint64_t n) { return decompose(build(subadd_matrix(modulus(n)))).lengths; }

std::string figures() {
    expect(subadd_spectrum(3) == spectrum{{1, 1}, {8, 1}}, "spectrum n=3");
    expect(subadd_spectrum(5) == spectrum{{1, 1}, {2, 2}, {4, 5}}, "spectrum n=5");
    for (auto [n, want] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 8}, {6, 2}}) {
        expect(weak_components(build(subadd_matrix(modulus(n)))).count == want, "components n=" + std::to_string(n));
    }
    const auto perm = build(perm3_matrix().reduce(modulus(3)));
    expect(decompose(perm).lengths == spectrum{{1, 3}, {3, 8}}, "permutation spectrum n=3");
    return first_failure;
}

std::string binary_tree() {
    for (unsigned r = 1; r <= 10; ++r) {
        const auto tag = "r=" + std::to_string(r);
        const auto lp = make_level_partition(r);
        for (unsigned i = 0; i < 2 * r; ++i) {
            expect(lp.levels[i].size() == (std::uint64_t{1} << (2 * r - i - 1)), tag + " |P_" + std::to_string(i) + "|");
        }
        expect(lp.levels[2 * r] == std::vector<vertex_id>{0}, tag + " P_2r");
        const auto arcs = check_level_arcs(r);
        expect(arcs.ok(), tag + " level arcs");
        expect(arcs.parentless_is_p0, tag + " parentless set");
        const auto t = make_tree_report(r);
        const std::uint64_t side = std::uint64_t{1} << r;
        expect(t.is_inverted_pbt, tag + " inverted perfect binary tree");
        expect(t.vertex_count == side * side - 1, tag + " vertex count");
        expect(t.arc_count == side * side - 2, tag + " arc count");
        expect(t.root_vertex == side / 2 + side * (side / 2), tag + " root");
        expect(t.depth == 2 * r - 1, tag + " depth");
        expect(t.closing_arcs_present, tag + " closing arcs");
    }
    return first_failure;
}

std::string primes() {
    for (std::uint64_t p = 3; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        const auto tag = "p=" + std::to_string(p);
        const auto pr = predict(p);
        expect(pr.implied_spectrum() == subadd_spectrum(p), tag + " spectrum");
        expect(pr.secondary_exists == (pr.k % 8 != 0), tag + " secondary iff 8 does not divide k");
        switch (mod8_criterion(p)) {
        case mod8_verdict::none_guaranteed: expect(!pr.secondary_exists, tag + " mod 8 (none)"); break;
        case mod8_verdict::exists_guaranteed: expect(pr.secondary_exists, tag + " mod 8 (exists)"); break;
        case mod8_verdict::undetermined: break;
        }
    }
    return first_failure;
}

std::string structure() {
    std::vector<int_matrix> matrices = fixed_matrix_grid();
    for (std::uint64_t n : {3u, 5u, 7u, 9u, 11u}) {
        const modulus mod(n);
        for (const auto& mat : matrices) {
            const auto reduced = mat.reduce(mod);
            if (gcd(mat_det(reduced), n) != 1) continue;
            const auto k = zn_order(reduced);
            const auto tag = to_string(mat) + " n=" + std::to_string(n);
            if (!expect(k.has_value(), tag + " order")) continue;
            expect(verify_cycle_divisibility(build(reduced), *k), tag + " divisibility");
        }
    }
    matrices.push_back(subadd_integer_matrix());
    matrices.push_back(perm3_matrix());
    for (const auto& mat : matrices) {
        for (std::uint64_t n1 = 2; n1 <= 18; ++n1) {
            for (std::uint64_t n2 = 2; n1 * n2 <= 36; ++n2) {
                const auto tag = to_string(mat) + " " + std::to_string(n1) + "," + std::to_string(n2);
                expect(verify_embedding(mat, n1, n2), tag + " embedding");
                if (gcd(n1, n2) == 1) expect(tensor_iso_witness(mat, n1, n2).is_valid(), tag + " tensor");
            }
        }
    }
    const auto cases = similarity_cases();
    expect(cases.size() == 20, "similarity case count");
    for (const auto& c : cases) {
        expect(gcd(mat_det(c.s.reduce(modulus(c.n))), c.n) == 1, "similarity precondition");
        expect(similarity_iso_witness(c.m1, c.s, c.n).witness.is_valid(), to_string(c.m1) + " similarity");
    }
    return first_failure;
}

std::string odd_moduli() {
    for (std::uint64_t n = 3; n <= 99; n += 2) {
        const auto rep = verify_odd_n(n);
        expect(rep.all_cycles && rep.max_divisor_ok, "n=" + std::to_string(n));
    }
    for (std::uint64_t n1 : {3u, 5u, 7u, 9u}) {
        for (unsigned k : {1u, 2u}) {
            const auto rep = verify_mixed(n1, k);
            const auto tag = "n1=" + std::to_string(n1) + " k=" + std::to_string(k);
            expect(rep.copies_found == n1 * n1, tag + " copies");
            expect(rep.component_match, tag + " components");
        }
    }
    return first_failure;
}

std::string sequence() {
    std::ifstream in(std::string(MOVEGRAPH_TEST_DATA) + "/oeis_golden.txt");
    std::vector<std::uint64_t> golden;
    for (std::uint64_t x; in >> x;) golden.push_back(x);
    expect(golden.size() == 20, "golden file");
    expect(oeis_terms(20) == golden, "terms differ from golden file");
    return first_failure;
}

std::string determinism() {
    const std::vector<std::string> all{"all"};
    bool pass_a = false, pass_b = false;
    const auto a = run_suites(all, suite_params{}, pass_a).dump(2);
    const auto b = run_suites(all, suite_params{}, pass_b).dump(2);
    expect(a == b, "reports differ");
    expect(pass_a && pass_b, "verify suite reported failures");
    return first_failure;
}

}  // namespace

int main() {
    const std::vector<criterion> criteria = {
        {1, "figure reproduction", 1.0, figures},
        {2, "perfect binary tree, r = 1..10", 30.0, binary_tree},
        {3, "prediction equals enumeration, odd p < 200", 60.0, primes},
        {4, "structure suite", 60.0, structure},
        {5, "odd and mixed moduli", 30.0, odd_moduli},
        {6, "component sequence, 20 terms", 10.0, sequence},
        {7, "determinism of the verify report", 0.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        first_failure.clear();
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
            failure = "over time limit";
        }
        const bool ok = failure.empty();
        failed += !ok;
        if (c.limit_seconds > 0) {
            std::printf("%s %d %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, elapsed,
                        c.limit_seconds, ok ? "" : ": ", failure.c_str());
        } else {
            std::printf("%s %d %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, elapsed, ok ? "" : ": ",
                        failure.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
