#include "lz76/parse.hpp"

#include <algorithm>

#include "lz76/errors.hpp"

namespace lz76 {

bool occurs_before_end(std::span<const symbol_t> s, std::size_t begin, std::size_t end) noexcept {
    // Occurrence window is s[0..end-1]; a match of s[begin..end] inside it
    // must start at some q < begin.
    const std::size_t len = end - begin + 1;
    const symbol_t* data = s.data();
    for (std::size_t q = 0; q < begin; ++q) {
        if (std::equal(data + q, data + q + len, data + begin)) return true;
    }
    return false;
}

namespace {

// Greedy scan shared by the full parse and the counting-only path. Each
// component is the shortest extension not occurring before its own last
// symbol; the final component may terminate non-exhaustively at n.
template <typename OnBoundary>
ScanResult scan_impl(std::span<const symbol_t> s, OnBoundary&& on_boundary) noexcept {
    const std::size_t n = s.size();
    ScanResult result;
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t end = pos;
        bool exhaustive = false;
        while (end < n) {
            if (!occurs_before_end(s, pos, end)) {
                exhaustive = true;
                break;
            }
            ++end;
        }
        if (!exhaustive) end = n - 1;
        on_boundary(end + 1); // 1-based
        ++result.component_count;
        result.last_component_exhaustive = exhaustive;
        pos = end + 1;
    }
    return result;
}

} // namespace

ScanResult scan_complexity(std::span<const symbol_t> symbols) noexcept {
    return scan_impl(symbols, [](std::size_t) {});
}

std::vector<std::pair<std::size_t, std::size_t>> component_spans(const History& history) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    spans.reserve(history.boundaries.size());
    std::size_t begin = 1;
    for (const std::size_t end : history.boundaries) {
        spans.emplace_back(begin, end);
        begin = end + 1;
    }
    return spans;
}

ExhaustiveHistory exhaustive_history(const Sequence& s) {
    ExhaustiveHistory parsed;
    const ScanResult r = scan_impl(
        s.symbols(), [&](std::size_t h) { parsed.history.boundaries.push_back(h); });
    parsed.last_component_exhaustive = r.last_component_exhaustive;
    return parsed;
}

std::size_t complexity(const Sequence& s) {
    return scan_complexity(s.symbols()).component_count;
}

bool is_exact(const Sequence& s) {
    return scan_complexity(s.symbols()).last_component_exhaustive;
}

} // namespace lz76
