#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lz76 {

// Index of a symbol within an alphabet.
using symbol_t = std::uint8_t;

// A finite ordered symbol set. Each symbol is one printable ASCII character;
// the character order fixes the symbol indices used everywhere else.
class Alphabet {
public:
    // Throws invalid_input_error unless the tokens are distinct printable
    // characters (at least one, at most 256).
    explicit Alphabet(std::string symbols);

    static Alphabet binary() { return Alphabet("01"); }

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }
    char symbol(symbol_t index) const { return symbols_.at(index); }

    // Index of a token character, or nullopt if it is not in the alphabet.
    std::optional<symbol_t> index_of(char token) const noexcept;

    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_; // -1 = not a symbol
};

} // namespace lz76
