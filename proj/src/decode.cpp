#include "lz76/decode.hpp"

#include <cctype>
#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

InputFormat parse_input_format(std::string_view name) {
    if (name == "symbols") return InputFormat::symbols;
    if (name == "bits") return InputFormat::bits;
    if (name == "bytes") return InputFormat::bytes;
    std::ostringstream msg;
    msg << "unknown input format '" << name << "' (expected symbols, bits, or bytes)";
    throw invalid_input_error(msg.str());
}

namespace {

[[noreturn]] void bad_byte(unsigned char byte, std::size_t offset, const Alphabet& alphabet) {
    std::ostringstream msg;
    msg << "input byte 0x" << std::hex << static_cast<int>(byte) << std::dec;
    if (std::isprint(byte)) msg << " ('" << static_cast<char>(byte) << "')";
    msg << " at offset " << offset << " is not a symbol of alphabet \"" << alphabet.symbols()
        << "\"";
    throw invalid_input_error(msg.str());
}

} // namespace

Sequence decode_input(const Alphabet& alphabet, InputFormat format, std::string_view raw) {
    std::vector<symbol_t> symbols;
    switch (format) {
    case InputFormat::symbols:
        symbols.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const unsigned char c = static_cast<unsigned char>(raw[i]);
            if (std::isspace(c)) continue;
            const auto idx = alphabet.index_of(raw[i]);
            if (!idx) bad_byte(c, i, alphabet);
            symbols.push_back(*idx);
        }
        break;
    case InputFormat::bits:
        if (alphabet.size() != 2)
            throw invalid_input_error(
                "bits format requires a binary alphabet (2 symbols), got size " +
                std::to_string(alphabet.size()));
        symbols.reserve(raw.size() * 8);
        for (const char byte : raw) {
            for (int bit = 7; bit >= 0; --bit)
                symbols.push_back(static_cast<symbol_t>((static_cast<unsigned char>(byte) >> bit) & 1));
        }
        break;
    case InputFormat::bytes:
        symbols.reserve(raw.size());
        for (const char byte : raw)
            symbols.push_back(static_cast<symbol_t>(static_cast<unsigned char>(byte) %
                                                    alphabet.size()));
        break;
    }
    if (symbols.empty())
        throw invalid_input_error("input decodes to an empty sequence");
    return Sequence(alphabet, std::move(symbols));
}

} // namespace lz76
