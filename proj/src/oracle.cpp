#include "lz76/oracle.hpp"

#include <sstream>

#include "lz76/errors.hpp"
#include "lz76/parse.hpp"

namespace lz76 {

bool is_valid_history(const Sequence& s, std::span<const std::size_t> boundaries) {
    const std::size_t n = s.length();
    if (boundaries.empty() || boundaries.back() != n) return false;
    const auto symbols = s.symbols();
    std::size_t prev = 0; // h_0 = 0
    for (const std::size_t h : boundaries) {
        if (h <= prev || h > n) return false;
        // Component minus its last symbol, s[prev..h-2] 0-based, must occur
        // within s[0..h-3]; empty bodies are trivially fine.
        if (h - prev >= 2 && !occurs_before_end(symbols, prev, h - 2)) return false;
        prev = h;
    }
    return true;
}

std::size_t min_history_complexity(const Sequence& s, std::size_t length_cap) {
    const std::size_t n = s.length();
    if (n > length_cap) {
        std::ostringstream msg;
        msg << "partition search over length " << n << " exceeds the cap of " << length_cap
            << " (2^" << n - 1 << " boundary sets)";
        throw resource_limit_error(msg.str());
    }

    std::size_t best = n + 1;
    std::vector<std::size_t> boundaries;
    // Bit i of the mask puts a boundary after position i+1; position n is
    // always a boundary. Validity prunes every set whose first boundary
    // is not 1.
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        boundaries.clear();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) boundaries.push_back(i + 1);
        }
        boundaries.push_back(n);
        if (boundaries.size() < best && is_valid_history(s, boundaries))
            best = boundaries.size();
    }
    return best;
}

} // namespace lz76
