#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lz76/sequence.hpp"

namespace lz76 {

// A partition of S into consecutive components, given by its 1-based
// component end positions h_1 < h_2 < ... < h_m = n (h_0 = 0 implicit).
// Component i spans positions h_{i-1}+1 .. h_i.
struct History {
    std::vector<std::size_t> boundaries;

    std::size_t component_count() const noexcept { return boundaries.size(); }
};

// 1-based inclusive (begin, end) position pairs of each component.
std::vector<std::pair<std::size_t, std::size_t>> component_spans(const History& history);

// The unique greedy shortest-new-phrase parse. Every component except
// possibly the last is exhaustive: it does not occur anywhere in the prefix
// ending just before its own last symbol. last_component_exhaustive doubles
// as the exactness flag of the sequence.
struct ExhaustiveHistory {
    History history;
    bool last_component_exhaustive = false;

    std::size_t component_count() const noexcept { return history.component_count(); }
};

// Does s[begin..end] (0-based inclusive) occur within s[0..end-1]? Any such
// occurrence starts strictly before `begin`, so it may overlap the candidate
// except for its final symbol. Direct window scan; this is the normative
// occurrence test for both parsing and exactness.
bool occurs_before_end(std::span<const symbol_t> s, std::size_t begin, std::size_t end) noexcept;

ExhaustiveHistory exhaustive_history(const Sequence& s);

// Component count of the exhaustive history; equals the minimum component
// count over all valid histories.
std::size_t complexity(const Sequence& s);

// True iff the final component of the exhaustive history does not occur in
// the first n-1 symbols.
bool is_exact(const Sequence& s);

// Allocation-free variant for enumeration loops.
struct ScanResult {
    std::uint32_t component_count = 0;
    bool last_component_exhaustive = false;
};

ScanResult scan_complexity(std::span<const symbol_t> symbols) noexcept;

} // namespace lz76
