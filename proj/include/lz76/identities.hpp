#pragma once

#include <span>
#include <string>
#include <vector>

#include "lz76/count_table.hpp"

namespace lz76 {

// Outcome of one identity check. `required` distinguishes the identities the
// verifier must satisfy from proof-bookkeeping claims that are only observed
// and reported. `detail` carries the verified range or the first
// counterexample with both sides.
struct IdentityResult {
    std::string name;
    bool required = true;
    bool passed = false;
    std::string detail;
};

// One-step count recurrence: for every k >= 1,
//   N_{n+1}(k+1) = alpha * ( N_n(k+1) - N_n((k+1)_e) + N_n(k_e) ).
// Exact integer identity; t_next must be the table for length t.length()+1
// over the same alphabet.
IdentityResult verify_step_recurrence(const CountTable& t, const CountTable& t_next);

// Distribution identity: for every n < N and every k >= 1,
//   P_{n+1}(C_{n+1} <= k) = 1 - sum_{r=1..n} P_r(k_e),
// checked with exact rationals. `tables` must hold lengths 1..N contiguously.
IdentityResult verify_cdf_exact_mass_identity(std::span<const CountTable> tables);

// One-step CDF extension: P_{n+1}(C_{n+1} <= k) = P_n(C_n <= k) - P_n(k_e).
// cdf must hold the exact CDF of length n = t.length() at k = 1..n; the
// result covers k = 1..n+1 without enumerating length n+1.
std::vector<big_rational> extend_cdf(const CountTable& t, std::span<const big_rational> cdf);

// sum_{r=1..N} P_r(k_e) over the given tables (lengths 1..N). Non-decreasing
// in N and bounded by 1.
big_rational exact_mass_partial_sum(std::span<const CountTable> tables, std::size_t k);

// extend_cdf output equals the directly enumerated CDF, for every n < N.
IdentityResult verify_cdf_extension(std::span<const CountTable> tables);

// P_{n+1}(C_{n+1} <= k) <= P_n(C_n <= k) for every fixed k.
IdentityResult verify_cdf_monotone_in_length(std::span<const CountTable> tables);

// Telescoped tail identity: for every n < N and 1 <= k <= n,
//   sum_{s=1..n+1-k} P_{n+1}(k+s) = sum_{r=1..n} P_r(k_e).
IdentityResult verify_tail_mass_telescoping(std::span<const CountTable> tables);

// exact_mass_partial_sum is non-decreasing in N and <= 1 for every k.
IdentityResult verify_exact_mass_partial_sum_bounds(std::span<const CountTable> tables);

// Reported-only observation: the claim sum_{r=1..n} P_r(n_e) = 0 for n >= 2
// has small-n counterexamples; records the first one found.
IdentityResult observe_full_length_exact_mass(std::span<const CountTable> tables);

// Reported-only observation: the claim P_{n+1}(k+s) = 0 for s > n-k
// (n > k >= 1) has small-n counterexamples; records the first one found.
IdentityResult observe_tail_support(std::span<const CountTable> tables);

// All checks above in report order: required identities first, then the two
// reported-only observations.
std::vector<IdentityResult> run_identity_checks(std::span<const CountTable> tables);

} // namespace lz76
