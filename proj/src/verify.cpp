#include "movegraph/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "movegraph/errors.hpp"
#include "movegraph/predictor.hpp"
#include "movegraph/structure.hpp"
#include "movegraph/subadd.hpp"

namespace movegraph {

namespace {

using check_fn = std::function<void(const suite_params&, suite_result&)>;

std::string describe(const int_matrix& mat, std::uint64_t n) { return "M=" + to_string(mat) + " n=" + std::to_string(n); }

void expect(suite_result& out, bool ok, const std::string& what) {
    ++out.cases;
    if (!ok) out.failures.push_back(what);
}

std::vector<int_matrix> named_matrices() { return {subadd_integer_matrix(), perm3_matrix()}; }

bool unit_det(const int_matrix& mat, std::uint64_t n) {
    return gcd(mat_det(mat.reduce(modulus(n))), n) == 1;
}

/// Integer matrices already in rational canonical form (companion blocks), so
/// the change of basis is the identity.
std::vector<int_matrix> companion_matrices() {
    return {
        int_matrix::from_rows({{0, -1}, {1, 0}}),         // x^2 + 1
        int_matrix::from_rows({{0, 1}, {1, 1}}),          // x^2 - x - 1
        int_matrix::from_rows({{0, -2}, {1, 2}}),         // x^2 - 2x + 2 (sub-add char poly)
        int_matrix::from_rows({{0, 1}, {1, 0}}),          // x^2 - 1
        int_matrix::from_rows({{0, 3}, {1, 1}}),          // x^2 - x - 3
        int_matrix::from_rows({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}),   // x^3 - x - 1
        int_matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),   // x^3 - 1
        int_matrix::from_rows({{0, 0, -1}, {1, 0, 2}, {0, 1, 1}}),  // x^3 - x^2 - 2x + 1
    };
}

/// Unimodular changes of basis used to move the companion matrices out of
/// canonical form; det = +-1 is coprime to every prime.
std::vector<int_matrix> unimodular_2x2() {
    return {int_matrix::from_rows({{1, 1}, {0, 1}}), int_matrix::from_rows({{2, 1}, {1, 1}}),
            int_matrix::from_rows({{0, 1}, {1, 0}})};
}

void suite_cycles(const suite_params& params, suite_result& out) {
    auto matrices = fixed_matrix_grid();
    matrices.push_back(perm3_matrix());
    for (std::uint64_t n = 2; n <= params.n_max; ++n) {
        for (const auto& mat : matrices) {
            if (!unit_det(mat, n)) continue;
            const auto reduced = mat.reduce(modulus(n));
            const auto k = zn_order(reduced);
            if (!k) {
                expect(out, false, describe(mat, n) + ": invertible matrix without finite order");
                continue;
            }
            expect(out, verify_cycle_divisibility(build(reduced, params.budget), *k), describe(mat, n));
        }
    }
}

void suite_scaling(const suite_params& params, suite_result& out) {
    for (std::uint64_t n = 2; n <= params.n_max; ++n) {
        for (const auto& mat : named_matrices()) {
            if (!unit_det(mat, n)) continue;
            const auto g = build(mat.reduce(modulus(n)), params.budget);
            for (std::uint64_t s = 1; s < n; ++s) {
                if (gcd(s, n) != 1) continue;
                expect(out, verify_scaling_property(g, static_cast<std::int64_t>(s)),
                       describe(mat, n) + " s=" + std::to_string(s));
            }
        }
    }
}

void suite_closure(const suite_params& params, suite_result& out) {
    const auto matrices = fixed_matrix_grid();
    const auto top = std::min<std::uint64_t>(params.n_max, 7);
    for (std::uint64_t n = 2; n <= top; ++n) {
        const modulus mod(n);
        for (const auto& mat : matrices) {
            const auto g = build(mat.reduce(mod), params.budget);
            const auto d = decompose(g);
            for (const auto& [ell, count] : d.lengths) {
                std::vector<vertex_id> members;
                for (vertex_id v = 0; v < g.size(); ++v) {
                    if (d.on_cycle(v) && ell % d.cycle_length_of(v) == 0) members.push_back(v);
                }
                bool closed = true;
                for (auto x : members) {
                    const auto xv = decode(x, mod, 2);
                    for (auto y : members) {
                        const auto yv = decode(y, mod, 2);
                        const auto sum = encode(mod_vector({mod.add(xv[0], yv[0]), mod.add(xv[1], yv[1])}, mod));
                        if (!d.on_cycle(sum) || ell % d.cycle_length_of(sum) != 0) closed = false;
                    }
                }
                expect(out, closed, describe(mat, n) + " l=" + std::to_string(ell));
            }
        }
    }
}

void suite_embedding(const suite_params& params, suite_result& out) {
    for (const auto& mat : named_matrices()) {
        for (std::uint64_t n1 = 2; n1 * 2 <= 3 * params.n_max; ++n1) {
            for (std::uint64_t n2 = 2; n1 * n2 <= 3 * params.n_max; ++n2) {
                expect(out, verify_embedding(mat, n1, n2, params.budget),
                       describe(mat, n1) + " into n=" + std::to_string(n1 * n2));
            }
        }
    }
}

void suite_tensor(const suite_params& params, suite_result& out) {
    for (const auto& mat : named_matrices()) {
        for (std::uint64_t n1 = 2; n1 * 2 <= 3 * params.n_max; ++n1) {
            for (std::uint64_t n2 = 2; n1 * n2 <= 3 * params.n_max; ++n2) {
                if (gcd(n1, n2) != 1) continue;
                const auto w = tensor_iso_witness(mat, n1, n2, params.budget);
                const bool same_spectrum = decompose(w.domain_successor).lengths == decompose(w.codomain_successor).lengths;
                expect(out, w.is_valid() && same_spectrum,
                       describe(mat, n1 * n2) + " = " + std::to_string(n1) + " x " + std::to_string(n2));
            }
        }
    }
}

void suite_similarity(const suite_params& params, suite_result& out) {
    for (const auto& c : similarity_cases()) {
        const auto w = similarity_iso_witness(c.m1, c.s, c.n, params.budget);
        expect(out, w.witness.is_valid(), describe(c.m1, c.n) + " S=" + to_string(c.s));
    }
}

void suite_kcycle(const suite_params& params, suite_result& out) {
    std::vector<int_matrix> matrices = companion_matrices();
    for (const auto& c : companion_matrices()) {
        if (c.dim() != 2) continue;
        for (const auto& u : unimodular_2x2()) matrices.push_back(conjugate_by(c, u));
    }
    for (std::uint64_t p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        for (const auto& mat : matrices) {
            const auto reduced = mat.reduce(modulus(p));
            const auto k = zn_order(reduced);
            if (!k) continue;
            expect(out, has_cycle_of_length(build(reduced, params.budget), *k),
                   describe(mat, p) + " k=" + std::to_string(*k));
        }
    }
}

void suite_levels(const suite_params& params, suite_result& out) {
    for (unsigned r = 1; r <= params.r_max; ++r) {
        const auto lp = make_level_partition(r, params.budget);
        bool sizes = lp.levels.size() == 2 * r + 1 && lp.levels.back() == std::vector<vertex_id>{0};
        for (unsigned i = 0; i < lp.levels.size() && sizes; ++i) sizes = lp.levels[i].size() == expected_level_size(r, i);
        expect(out, sizes, "r=" + std::to_string(r) + " level sizes");
        expect(out, verify_level_arcs(r, params.budget), "r=" + std::to_string(r) + " level arcs");
    }
}

void suite_tree(const suite_params& params, suite_result& out) {
    for (unsigned r = 1; r <= params.r_max; ++r) {
        const auto t = make_tree_report(r, params.budget);
        const std::uint64_t half = std::uint64_t{1} << (r - 1);
        const bool ok = t.is_inverted_pbt && t.depth == 2 * r - 1 && t.closing_arcs_present &&
                        t.root_vertex == half + half * (2 * half);
        expect(out, ok, "r=" + std::to_string(r));
    }
}

void suite_odd(const suite_params& params, suite_result& out) {
    for (std::uint64_t n = 3; n <= params.n_max; n += 2) {
        const auto report = verify_odd_n(n, params.budget);
        expect(out, report.all_cycles && report.max_divisor_ok && (4 * euler_phi(n)) % report.k == 0,
               "n=" + std::to_string(n));
    }
}

void suite_mixed(const suite_params& params, suite_result& out) {
    for (std::uint64_t n1 = 3; n1 <= std::min<std::uint64_t>(params.n_max, 9); n1 += 2) {
        for (unsigned k = 1; k <= 2; ++k) {
            const auto report = verify_mixed(n1, k, params.budget);
            expect(out, report.copies_found == n1 * n1 && report.component_match,
                   "n1=" + std::to_string(n1) + " k=" + std::to_string(k));
        }
    }
}

void suite_primes(const suite_params& params, suite_result& out) {
    for (const auto& row : survey(params.p_max)) {
        const auto& pr = row.prediction;
        const auto p = pr.p;
        const auto tag = "p=" + std::to_string(p);
        expect(out, verify_prediction(p, params.budget), tag + " spectrum");
        expect(out, pr.s == pr.t || pr.s == 2 * pr.t || pr.s == 4 * pr.t, tag + " s in {t,2t,4t}");
        expect(out, pr.secondary_exists == (pr.k % 8 != 0), tag + " secondary iff 8 !| k");
        const bool mod8_ok = row.criterion == mod8_verdict::undetermined ||
                             (row.criterion == mod8_verdict::exists_guaranteed) == pr.secondary_exists;
        expect(out, mod8_ok, tag + " mod 8 criterion");
        expect(out, zn_order(subadd_matrix(modulus(p))) == pr.k, tag + " k equals Z_p-order");
        std::uint64_t total = 0;
        for (const auto& [len, count] : pr.implied_spectrum()) total += len * count;
        expect(out, total == p * p, tag + " vertex conservation");
    }
}

const std::map<std::string, check_fn, std::less<>>& registry() {
    static const std::map<std::string, check_fn, std::less<>> suites = {
        {"cycles", suite_cycles},     {"scaling", suite_scaling},       {"closure", suite_closure},
        {"embedding", suite_embedding}, {"tensor", suite_tensor},       {"similarity", suite_similarity},
        {"kcycle", suite_kcycle},     {"levels", suite_levels},         {"tree", suite_tree},
        {"odd", suite_odd},           {"mixed", suite_mixed},           {"primes", suite_primes},
    };
    return suites;
}

}  // namespace

int_matrix perm3_matrix() { return int_matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

std::vector<int_matrix> small_matrix_grid() {
    std::vector<int_matrix> out;
    out.reserve(625);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) out.push_back(int_matrix(2, {a, b, c, d}));
    return out;
}

std::vector<int_matrix> fixed_matrix_grid() {
    const auto all = small_matrix_grid();
    std::vector<int_matrix> out;
    out.reserve(200);
    for (std::size_t i = 0; i < 200; ++i) out.push_back(all[i * all.size() / 200]);
    return out;
}

std::vector<similarity_case> similarity_cases() {
    const auto subadd = subadd_integer_matrix();
    const auto perm3 = perm3_matrix();
    const auto shear = int_matrix::from_rows({{1, 0}, {1, 1}});
    const auto swap = int_matrix::from_rows({{0, 1}, {1, 0}});
    const auto cat = int_matrix::from_rows({{2, 1}, {1, 1}});
    const auto neg_shear = int_matrix::from_rows({{1, -2}, {0, 1}});
    const auto half_scale = int_matrix::from_rows({{1, 0}, {0, 2}});
    const auto even_lower = int_matrix::from_rows({{1, 1}, {2, 1}});
    const auto fib = int_matrix::from_rows({{0, 1}, {1, 1}});
    const auto rot3 = int_matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    const auto upper3 = int_matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    const auto mixed3 = int_matrix::from_rows({{1, 0, 2}, {0, 1, 0}, {1, 0, 1}});
    const auto companion3 = int_matrix::from_rows({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
    return {
        {subadd, int_matrix::identity(2), 5},
        {subadd, shear, 5},
        {subadd, shear, 6},
        {subadd, swap, 7},
        {subadd, cat, 9},
        {subadd, neg_shear, 4},
        {subadd, cat, 12},
        {fib, shear, 10},
        {fib, cat, 11},
        {fib, swap, 8},
        {even_lower, half_scale, 3},  // det S = 2: conjugate [[1,2],[1,1]] is integral
        {even_lower, half_scale, 5},
        {even_lower, half_scale, 9},
        {cat, neg_shear, 7},
        {perm3, rot3, 3},
        {perm3, upper3, 4},
        {perm3, mixed3, 5},
        {companion3, upper3, 3},
        {companion3, rot3, 6},
        {companion3, mixed3, 7},
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"cycles", "scaling", "closure", "embedding", "tensor", "similarity",
                                                   "kcycle", "levels",  "tree",    "odd",       "mixed",  "primes"};
    return names;
}

suite_result run_suite(std::string_view name, const suite_params& params) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw domain_error("unknown verification suite: " + std::string(name));
    suite_result out;
    out.name = std::string(name);
    it->second(params, out);
    return out;
}

ordered_json run_suites(const std::vector<std::string>& names, const suite_params& params, bool& all_passed) {
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
        } else {
            expanded.push_back(n);
        }
    }
    ordered_json report;
    report["params"] = {{"n_max", params.n_max}, {"p_max", params.p_max}, {"r_max", params.r_max}};
    auto suites = ordered_json::array();
    all_passed = true;
    for (const auto& name : expanded) {
        const auto result = run_suite(name, params);
        all_passed = all_passed && result.passed();
        ordered_json entry;
        entry["name"] = result.name;
        entry["cases"] = result.cases;
        entry["passed"] = result.passed();
        entry["failures"] = result.failures;
        suites.push_back(std::move(entry));
    }
    report["suites"] = std::move(suites);
    report["passed"] = all_passed;
    return report;
}

}  // namespace movegraph
