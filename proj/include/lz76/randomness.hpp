#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lz76/count_table.hpp"
#include "lz76/parse.hpp"

namespace lz76 {

// The critical set K_{n,k} = { S in A^n : C_n(S) <= k }: low complexity is
// the suspicious region.
struct CriticalSetSpec {
    unsigned alphabet_size = 2;
    std::size_t length = 0;
    std::size_t threshold_k = 0;
};

struct TestVerdict {
    std::size_t observed_complexity = 0;
    std::size_t threshold_k = 0;
    bool in_critical_set = false;
    // P_n(K_{n,k}), present only when a distribution table for (alpha, n)
    // was supplied.
    std::optional<big_rational> significance;
};

// floor(n / log_alpha(n)). Exact integer arithmetic: when n is a power of
// alpha the logarithm is an integer, and for n up to kExactThresholdLimit the
// floor is resolved by comparing n^k against alpha^n directly. Beyond that,
// extended-precision floating point. Requires alpha >= 2 and n > alpha
// (degenerate_threshold_error otherwise).
std::size_t default_threshold(unsigned alphabet_size, std::size_t length);

inline constexpr std::size_t kExactThresholdLimit = 65536;

// P_n(K_{n,k}) = sum_{s=1..k} P_n(s), exact. Requires 1 <= k <= table length.
big_rational critical_probability(const CountTable& table, std::size_t k);

// Classifies a sequence against the critical set. `table`, when given, must
// match (alphabet size, length) and supplies the significance level.
TestVerdict test_sequence(const Sequence& s, const CriticalSetSpec& spec,
                          const CountTable* table = nullptr);

// Same with threshold_k = default_threshold(alpha, n).
TestVerdict test_sequence(const Sequence& s, const CountTable* table = nullptr);

// Verdict as a JSON document; significance as decimal numerator/denominator
// strings, or null when absent.
std::string verdict_to_json(std::size_t length, const TestVerdict& verdict);

} // namespace lz76
