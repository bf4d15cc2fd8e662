#include "lz76/sequence.hpp"

#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

Sequence::Sequence(Alphabet alphabet, std::vector<symbol_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw invalid_input_error("sequence must contain at least one symbol");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_.size()) {
            std::ostringstream msg;
            msg << "symbol index " << static_cast<unsigned>(symbols_[i]) << " at position "
                << i + 1 << " is outside the alphabet (size " << alphabet_.size() << ")";
            throw invalid_input_error(msg.str());
        }
    }
}

Sequence Sequence::from_string(const Alphabet& alphabet, std::string_view text) {
    std::vector<symbol_t> symbols;
    symbols.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto idx = alphabet.index_of(text[i]);
        if (!idx) {
            std::ostringstream msg;
            msg << "character '" << text[i] << "' at position " << i + 1
                << " is not a symbol of alphabet \"" << alphabet.symbols() << "\"";
            throw invalid_input_error(msg.str());
        }
        symbols.push_back(*idx);
    }
    return Sequence(alphabet, std::move(symbols));
}

symbol_t Sequence::at(std::size_t pos) const {
    if (pos < 1 || pos > symbols_.size())
        throw invalid_input_error("sequence position out of range");
    return symbols_[pos - 1];
}

std::span<const symbol_t> Sequence::substring(std::size_t i, std::size_t j) const {
    if (j < i) return {};
    if (i < 1 || j > symbols_.size())
        throw invalid_input_error("substring bounds out of range");
    return std::span<const symbol_t>(symbols_).subspan(i - 1, j - i + 1);
}

std::string Sequence::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (const symbol_t s : symbols_) out.push_back(alphabet_.symbol(s));
    return out;
}

} // namespace lz76
