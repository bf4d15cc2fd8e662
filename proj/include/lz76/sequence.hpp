#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lz76/alphabet.hpp"

namespace lz76 {

// A finite non-empty string S = s_1...s_n over an Alphabet, stored as symbol
// indices. Positions are 1-based in the public interface.
class Sequence {
public:
    // Throws invalid_input_error if symbols is empty or contains an index
    // outside the alphabet.
    Sequence(Alphabet alphabet, std::vector<symbol_t> symbols);

    // Decodes a token string (every character must be an alphabet symbol).
    static Sequence from_string(const Alphabet& alphabet, std::string_view text);

    std::size_t length() const noexcept { return symbols_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const symbol_t> symbols() const noexcept { return symbols_; }

    // s_i, 1-based.
    symbol_t at(std::size_t pos) const;

    // S(i, j), 1-based inclusive; empty when j < i. Throws invalid_input_error
    // when i < 1 or j > n.
    std::span<const symbol_t> substring(std::size_t i, std::size_t j) const;

    std::string to_string() const;

private:
    Alphabet alphabet_;
    std::vector<symbol_t> symbols_;
};

} // namespace lz76
