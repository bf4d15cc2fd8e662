#pragma once

#include <cstdint>
#include <vector>

#include "lz76/count_table.hpp"

namespace lz76 {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

// Visits every sequence in A^n exactly once, in lexicographic order by symbol
// index, tallying complexity and exactness in one scan. Requires
// alphabet_size >= 2 and alpha^n <= budget (resource_limit_error otherwise).
//
// With workers > 1 the index space [0, alpha^n) is split into contiguous
// ranges scanned concurrently; per-range tables are merged by addition, so
// the result is identical for any worker count.
CountTable enumerate_counts(unsigned alphabet_size, unsigned length,
                            std::uint64_t budget = kDefaultEnumerationBudget,
                            unsigned workers = 1);

// Tables for n = 1..max_length. The budget applies to each length, so it is
// effectively a bound on alpha^max_length.
std::vector<CountTable> enumerate_tables(unsigned alphabet_size, unsigned max_length,
                                         std::uint64_t budget = kDefaultEnumerationBudget,
                                         unsigned workers = 1);

} // namespace lz76
