#include "lz76/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <vector>

#include "lz76/errors.hpp"
#include "lz76/parse.hpp"

namespace lz76 {

namespace {

// Digits of `index` in base alpha, most significant first, so ascending
// indices visit A^n in lexicographic symbol order.
void decode_index(std::uint64_t index, unsigned alphabet_size,
                  std::vector<symbol_t>& digits) {
    for (std::size_t pos = digits.size(); pos-- > 0;) {
        digits[pos] = static_cast<symbol_t>(index % alphabet_size);
        index /= alphabet_size;
    }
}

void scan_range(unsigned alphabet_size, unsigned length, std::uint64_t lo, std::uint64_t hi,
                CountTable& out) {
    std::vector<symbol_t> digits(length, 0);
    decode_index(lo, alphabet_size, digits);
    for (std::uint64_t i = lo; i < hi; ++i) {
        const ScanResult r = scan_complexity(digits);
        out.record(r.component_count, r.last_component_exhaustive);
        // Odometer increment at the least significant position.
        for (std::size_t pos = length; pos-- > 0;) {
            if (++digits[pos] < alphabet_size) break;
            digits[pos] = 0;
        }
    }
}

} // namespace

CountTable enumerate_counts(unsigned alphabet_size, unsigned length, std::uint64_t budget,
                            unsigned workers) {
    if (alphabet_size < 2)
        throw invalid_input_error("enumeration requires an alphabet of size >= 2");
    if (length < 1)
        throw invalid_input_error("enumeration requires length >= 1");

    const big_int space = ipow(big_int(alphabet_size), length);
    if (space > big_int(budget)) {
        std::ostringstream msg;
        msg << "enumeration of " << alphabet_size << "^" << length << " = " << space
            << " sequences exceeds the budget of " << budget << " sequences";
        throw resource_limit_error(msg.str());
    }
    const auto total = space.convert_to<std::uint64_t>();

    CountTable result(alphabet_size, length);
    const std::uint64_t w = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total));
    if (w == 1) {
        scan_range(alphabet_size, length, 0, total, result);
        return result;
    }

    std::vector<CountTable> parts(w, CountTable(alphabet_size, length));
    std::vector<std::thread> threads;
    threads.reserve(w);
    const std::uint64_t base = total / w;
    const std::uint64_t rem = total % w;
    std::uint64_t lo = 0;
    for (std::uint64_t i = 0; i < w; ++i) {
        const std::uint64_t hi = lo + base + (i < rem ? 1 : 0);
        threads.emplace_back(scan_range, alphabet_size, length, lo, hi, std::ref(parts[i]));
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (const auto& part : parts) result.merge(part);
    return result;
}

std::vector<CountTable> enumerate_tables(unsigned alphabet_size, unsigned max_length,
                                         std::uint64_t budget, unsigned workers) {
    if (max_length < 1)
        throw invalid_input_error("enumeration requires max length >= 1");
    if (alphabet_size >= 2 && ipow(big_int(alphabet_size), max_length) > big_int(budget)) {
        std::ostringstream msg;
        msg << "enumeration of " << alphabet_size << "^" << max_length << " = "
            << ipow(big_int(alphabet_size), max_length) << " sequences exceeds the budget of "
            << budget << " sequences";
        throw resource_limit_error(msg.str());
    }
    std::vector<CountTable> tables;
    tables.reserve(max_length);
    for (unsigned n = 1; n <= max_length; ++n)
        tables.push_back(enumerate_counts(alphabet_size, n, budget, workers));
    return tables;
}

} // namespace lz76
