#include "lz76/alphabet.hpp"

#include <cctype>
#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw invalid_input_error("alphabet must contain at least one symbol");
    if (symbols_.size() > 256)
        throw invalid_input_error("alphabet cannot exceed 256 symbols");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isprint(c)) {
            std::ostringstream msg;
            msg << "alphabet symbol at position " << i << " is not printable (byte 0x"
                << std::hex << static_cast<int>(c) << ")";
            throw invalid_input_error(msg.str());
        }
        if (index_[c] >= 0) {
            std::ostringstream msg;
            msg << "alphabet symbol '" << symbols_[i] << "' is repeated";
            throw invalid_input_error(msg.str());
        }
        index_[c] = static_cast<std::int16_t>(i);
    }
}

std::optional<symbol_t> Alphabet::index_of(char token) const noexcept {
    const std::int16_t idx = index_[static_cast<unsigned char>(token)];
    if (idx < 0) return std::nullopt;
    return static_cast<symbol_t>(idx);
}

} // namespace lz76
