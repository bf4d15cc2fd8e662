#include "lz76/randomness.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "lz76/errors.hpp"

namespace lz76 {

std::size_t default_threshold(unsigned alphabet_size, std::size_t length) {
    if (alphabet_size < 2)
        throw invalid_input_error("the randomness threshold requires an alphabet of size >= 2");
    if (length <= alphabet_size) {
        std::ostringstream msg;
        msg << "n/log_alpha(n) is degenerate for n=" << length << " <= alpha=" << alphabet_size
            << "; pass an explicit threshold k";
        throw degenerate_threshold_error(msg.str());
    }

    // n = alpha^m makes log_alpha(n) = m exactly.
    big_int power = alphabet_size;
    std::size_t m = 1;
    while (power < length) {
        power *= alphabet_size;
        ++m;
    }
    if (power == length) return length / m;

    if (length <= kExactThresholdLimit) {
        // floor(n / log_alpha(n)) is the largest k with n^k <= alpha^n.
        const big_int bound = ipow(big_int(alphabet_size), length);
        std::size_t lo = 1, hi = length - 1;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (ipow(big_int(length), mid) <= bound)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    const long double q = static_cast<long double>(length) *
                          std::log(static_cast<long double>(alphabet_size)) /
                          std::log(static_cast<long double>(length));
    return static_cast<std::size_t>(std::floor(q));
}

big_rational critical_probability(const CountTable& table, std::size_t k) {
    if (k < 1 || k > table.length()) {
        std::ostringstream msg;
        msg << "critical-set threshold k=" << k << " must lie in 1.." << table.length();
        throw invalid_input_error(msg.str());
    }
    return table.cdf(k);
}

TestVerdict test_sequence(const Sequence& s, const CriticalSetSpec& spec,
                          const CountTable* table) {
    if (spec.alphabet_size != s.alphabet().size())
        throw invalid_input_error("critical-set spec alphabet size does not match the sequence");
    if (spec.length != s.length()) {
        std::ostringstream msg;
        msg << "sequence length " << s.length() << " does not match the spec length "
            << spec.length;
        throw invalid_input_error(msg.str());
    }
    if (spec.threshold_k < 1 || spec.threshold_k > spec.length)
        throw invalid_input_error("critical-set threshold must lie in 1..n");

    TestVerdict verdict;
    verdict.observed_complexity = complexity(s);
    verdict.threshold_k = spec.threshold_k;
    verdict.in_critical_set = verdict.observed_complexity <= spec.threshold_k;
    if (table != nullptr) {
        if (table->alphabet_size() != spec.alphabet_size || table->length() != spec.length)
            throw invalid_input_error("distribution table does not match (alphabet, length)");
        verdict.significance = critical_probability(*table, spec.threshold_k);
    }
    return verdict;
}

TestVerdict test_sequence(const Sequence& s, const CountTable* table) {
    CriticalSetSpec spec;
    spec.alphabet_size = static_cast<unsigned>(s.alphabet().size());
    spec.length = s.length();
    spec.threshold_k = default_threshold(spec.alphabet_size, spec.length);
    return test_sequence(s, spec, table);
}

std::string verdict_to_json(std::size_t length, const TestVerdict& verdict) {
    nlohmann::ordered_json doc;
    doc["n"] = length;
    doc["observed_complexity"] = verdict.observed_complexity;
    doc["threshold_k"] = verdict.threshold_k;
    doc["in_critical_set"] = verdict.in_critical_set;
    if (verdict.significance) {
        doc["significance"] = {{"num", numerator(*verdict.significance).str()},
                               {"den", denominator(*verdict.significance).str()}};
    } else {
        doc["significance"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

} // namespace lz76
