#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "lz76/sequence.hpp"

namespace lz76 {

enum class InputFormat {
    symbols, // ASCII tokens over the declared alphabet; whitespace is skipped
    bits,    // bytes unpacked most-significant-bit first; forces alpha = 2
    bytes,   // each byte reduced modulo the alphabet size
};

// Parses a format name (symbols|bits|bytes); throws invalid_input_error.
InputFormat parse_input_format(std::string_view name);

// Decodes raw input bytes into a Sequence over `alphabet`. Failures raise
// invalid_input_error naming the offending byte and offset; an input that
// decodes to zero symbols is rejected.
Sequence decode_input(const Alphabet& alphabet, InputFormat format,
                      std::string_view raw);

} // namespace lz76
