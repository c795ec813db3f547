#pragma once

/**
 * @file predictor.hpp
 * @brief Closed-form cycle spectrum of the sub-add move graph modulo an odd
 *        prime, from the multiplicative orders of its eigenvalues 1 +- i.
 *
 * With t = ord(-4 mod p) the matrix has order k = 4t (its fourth power is
 * -4 I). Cycle lengths are 1, s and k, where s = ord(1 - i) is the smaller
 * of the two eigenvalue orders and lies in {t, 2t, 4t}. Cycles of length s
 * other than the fixed point exist exactly when s != k, which happens
 * exactly when t is odd. Which of t, 2t applies is decided by t mod 4 and by
 * whether (1 + i)^t is i or -i.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "movegraph/graph.hpp"

namespace movegraph {

enum class prime_case { t_even, t1_i, t3_i, t1_negi, t3_negi, p3mod4 };

std::string_view to_string(prime_case c) noexcept;

struct prime_prediction {
    std::uint64_t p = 0;
    std::uint64_t t = 0;                 // ord(-4 mod p)
    std::uint64_t k = 0;                 // 4t, order of the matrix mod p
    std::optional<residue> i_root;       // the square root of -1 with ord(1 + i) = k; p = 1 mod 4 only
    std::uint64_t s = 0;                 // ord(1 - i)
    prime_case case_label = prime_case::p3mod4;
    bool secondary_exists = false;
    std::optional<std::uint64_t> secondary_length;
    std::uint64_t primary_count = 0;
    std::optional<std::uint64_t> secondary_count;
    std::uint64_t fixed_points = 1;

    /// {1: 1, s: secondary_count, k: primary_count} with equal keys merged.
    movegraph::spectrum implied_spectrum() const;
};

/// Throws domain_error unless p is an odd prime.
prime_prediction predict(std::uint64_t p);

/// predict(p) agrees exactly with the enumerated spectrum of Gamma_{M,p}.
bool verify_prediction(std::uint64_t p, std::uint64_t budget = kDefaultBudget);

enum class mod8_verdict { none_guaranteed, exists_guaranteed, undetermined };

std::string_view to_string(mod8_verdict v) noexcept;

/// Existence of secondary cycles as far as p mod 8 alone decides it.
mod8_verdict mod8_criterion(std::uint64_t p);

struct survey_row {
    prime_prediction prediction;
    std::uint64_t p_mod_8 = 0;
    mod8_verdict criterion = mod8_verdict::undetermined;
};

/// One row per odd prime p <= p_max, ordered by p.
std::vector<survey_row> survey(std::uint64_t p_max);

/// Weak component counts of the sub-add graph for n = 1 .. n_max; n = 1 is 1.
std::vector<std::uint64_t> oeis_terms(std::uint64_t n_max, std::uint64_t budget = kDefaultBudget);

}  // namespace movegraph
