#pragma once

#include <cstdint>
#include <vector>

#include "lz76/rational.hpp"

namespace lz76 {

// Complexity counts for one (alphabet size, length) pair: N_n(k) sequences of
// length n with complexity k, and how many of those are exact. Every k in
// 1..n is materialized (zeros included) so serialized tables have a fixed
// schema. Out-of-range k reads as zero.
class CountTable {
public:
    CountTable(unsigned alphabet_size, unsigned length);

    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    unsigned length() const noexcept { return length_; }

    // alpha^n
    const big_int& total() const noexcept { return total_; }

    std::uint64_t count(std::size_t k) const noexcept;
    std::uint64_t exact_count(std::size_t k) const noexcept;

    // Sum of count(s) for s = 1..k.
    std::uint64_t cumulative_count(std::size_t k) const noexcept;
    std::uint64_t sum_counts() const noexcept;

    // Tally one sequence of complexity k. Requires 1 <= k <= length.
    void record(std::size_t k, bool exact);

    // For deserialization. Requires exact_cnt <= cnt and 1 <= k <= length.
    void set_counts(std::size_t k, std::uint64_t cnt, std::uint64_t exact_cnt);

    // Element-wise addition; alphabet size and length must match.
    void merge(const CountTable& other);

    big_rational pmf(std::size_t k) const;
    big_rational exact_pmf(std::size_t k) const;
    big_rational cdf(std::size_t k) const;

    bool operator==(const CountTable& other) const noexcept;

private:
    unsigned alphabet_size_;
    unsigned length_;
    big_int total_;
    std::vector<std::uint64_t> counts_;       // index k, [0] unused
    std::vector<std::uint64_t> exact_counts_;
};

} // namespace lz76
