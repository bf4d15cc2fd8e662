#pragma once

#include <stdexcept>
#include <string>

namespace lz76 {

// An argument violates an operation's contract (bad symbol, empty input,
// mismatched tables, malformed serialized data, ...).
struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured cap (enumeration budget,
// partition-search length cap).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No distribution table is available for the requested (alphabet size, length).
struct table_unavailable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n <= alphabet size makes the n/log_alpha(n) threshold meaningless.
struct degenerate_threshold_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace lz76
