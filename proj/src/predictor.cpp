#include "movegraph/predictor.hpp"

#include <exception>
#include <string>

#include "movegraph/errors.hpp"
#include "movegraph/gf.hpp"
#include "movegraph/subadd.hpp"

namespace movegraph {

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p % 2 == 0 || !is_prime(p)) throw domain_error(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
}

/// Length of the secondary cycles each case dictates; nullopt when none.
std::optional<std::uint64_t> case_secondary_length(prime_case c, std::uint64_t t) {
    switch (c) {
    case prime_case::t1_i:
    case prime_case::t3_negi:
        return t;
    case prime_case::t3_i:
    case prime_case::t1_negi:
        return 2 * t;
    case prime_case::t_even:
    case prime_case::p3mod4:
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(prime_case c) noexcept {
    switch (c) {
    case prime_case::t_even: return "t_even";
    case prime_case::t1_i: return "t1_i";
    case prime_case::t3_i: return "t3_i";
    case prime_case::t1_negi: return "t1_negi";
    case prime_case::t3_negi: return "t3_negi";
    case prime_case::p3mod4: return "p3mod4";
    }
    return "?";
}

std::string_view to_string(mod8_verdict v) noexcept {
    switch (v) {
    case mod8_verdict::none_guaranteed: return "none_guaranteed";
    case mod8_verdict::exists_guaranteed: return "exists_guaranteed";
    case mod8_verdict::undetermined: return "undetermined";
    }
    return "?";
}

spectrum prime_prediction::implied_spectrum() const {
    spectrum out;
    out[1] += fixed_points;
    if (secondary_exists) out[*secondary_length] += *secondary_count;
    out[k] += primary_count;
    return out;
}

prime_prediction predict(std::uint64_t p) {
    require_odd_prime(p, "predict");
    const modulus mod(p);

    prime_prediction out;
    out.p = p;
    out.t = mult_order(mod.reduce(-4), mod);
    out.k = 4 * out.t;

    if (p % 4 == 1) {
        // Both roots of -1 give eigenvalues 1 + root and 1 - root; name them so
        // that 1 + i carries the full order k.
        const auto root = *sqrt_minus_one(p);
        const auto ord_plus = gf2_order(gf2_element::make(1 + static_cast<std::int64_t>(root), 0, p));
        const auto ord_minus = gf2_order(gf2_element::make(1 - static_cast<std::int64_t>(root), 0, p));
        const residue i = ord_plus >= ord_minus ? root : p - root;
        out.i_root = i;
        out.s = std::min(ord_plus, ord_minus);
        if (std::max(ord_plus, ord_minus) != out.k) throw invariant_error("ord(1+i) differs from 4t");

        if (out.t % 2 == 0) {
            out.case_label = prime_case::t_even;
        } else {
            const auto lift = mod.pow(mod.add(1, i), out.t);
            if (lift != i && lift != p - i) throw invariant_error("(1+i)^t is neither i nor -i");
            const bool plus_i = lift == i;
            const bool t1 = out.t % 4 == 1;
            out.case_label = plus_i ? (t1 ? prime_case::t1_i : prime_case::t3_i)
                                    : (t1 ? prime_case::t1_negi : prime_case::t3_negi);
        }
    } else {
        // 1 +- w are conjugate in GF(p^2) and share the order k.
        out.s = gf2_order(gf2_element::make(1, -1, p));
        if (gf2_order(gf2_element::make(1, 1, p)) != out.k || out.s != out.k) {
            throw invariant_error("conjugate eigenvalue orders differ from 4t");
        }
        out.case_label = prime_case::p3mod4;
    }

    out.secondary_exists = out.s != out.k;
    const auto by_case = case_secondary_length(out.case_label, out.t);
    if (by_case.has_value() != out.secondary_exists || (by_case && *by_case != out.s)) {
        throw invariant_error("case dispatch disagrees with ord(1-i) for p = " + std::to_string(p));
    }
    if (out.secondary_exists) {
        out.secondary_length = out.s;
        out.secondary_count = (p - 1) / out.s;
        out.primary_count = (p * p - p) / out.k;
    } else {
        out.primary_count = (p * p - 1) / out.k;
    }
    return out;
}

bool verify_prediction(std::uint64_t p, std::uint64_t budget) {
    const auto prediction = predict(p);
    const auto g = build(subadd_matrix(modulus(p)), budget);
    return decompose(g).lengths == prediction.implied_spectrum();
}

mod8_verdict mod8_criterion(std::uint64_t p) {
    require_odd_prime(p, "mod8_criterion");
    switch (p % 8) {
    case 3:
    case 7: return mod8_verdict::none_guaranteed;
    case 5: return mod8_verdict::exists_guaranteed;
    default: return mod8_verdict::undetermined;
    }
}

std::vector<survey_row> survey(std::uint64_t p_max) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (is_prime(p)) primes.push_back(p);
    }
    std::vector<survey_row> rows(primes.size());
    std::vector<std::exception_ptr> failures(primes.size());
    const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const auto p = primes[idx];
        try {
            rows[idx] = {predict(p), p % 8, mod8_criterion(p)};
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return rows;
}

std::vector<std::uint64_t> oeis_terms(std::uint64_t n_max, std::uint64_t budget) {
    std::vector<std::uint64_t> terms;
    terms.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n == 1) {
            terms.push_back(1);
            continue;
        }
        terms.push_back(weak_components(build(subadd_matrix(modulus(n)), budget)).count);
    }
    return terms;
}

}  // namespace movegraph
