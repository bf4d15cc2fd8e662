#pragma once

#include <cstddef>
#include <span>

#include "lz76/sequence.hpp"

namespace lz76 {

inline constexpr std::size_t kDefaultPartitionSearchCap = 16;

// True iff the 1-based boundary list h_1 < ... < h_m = n is a valid history:
// for every component, the component minus its last symbol already occurs in
// the text before it. This forces h_1 = 1.
bool is_valid_history(const Sequence& s, std::span<const std::size_t> boundaries);

// Minimum component count over all valid histories, found by enumerating
// every boundary subset. Exponential in n; refuses lengths above length_cap
// with a resource_limit_error. Independent of the greedy parser and used to
// cross-check it.
std::size_t min_history_complexity(const Sequence& s,
                                   std::size_t length_cap = kDefaultPartitionSearchCap);

} // namespace lz76
