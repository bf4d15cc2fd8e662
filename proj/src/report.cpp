#include "lz76/report.hpp"

#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

const CountTable& DistributionReport::table(unsigned length) const {
    return find_table(tables, alphabet_size, length);
}

big_rational DistributionReport::pmf(unsigned length, std::size_t k) const {
    return table(length).pmf(k);
}

big_rational DistributionReport::exact_pmf(unsigned length, std::size_t k) const {
    return table(length).exact_pmf(k);
}

big_rational DistributionReport::cdf(unsigned length, std::size_t k) const {
    return table(length).cdf(k);
}

bool DistributionReport::all_required_passed() const noexcept {
    for (const auto& r : identities) {
        if (r.required && !r.passed) return false;
    }
    return true;
}

DistributionReport build_report(unsigned alphabet_size, unsigned max_length,
                                std::uint64_t budget, unsigned workers) {
    DistributionReport report;
    report.alphabet_size = alphabet_size;
    report.tables = enumerate_tables(alphabet_size, max_length, budget, workers);
    report.identities = run_identity_checks(report.tables);
    return report;
}

const CountTable& find_table(std::span<const CountTable> tables, unsigned alphabet_size,
                             unsigned length) {
    for (const auto& t : tables) {
        if (t.alphabet_size() == alphabet_size && t.length() == length) return t;
    }
    std::ostringstream msg;
    msg << "no distribution table available for alphabet size " << alphabet_size
        << " and length " << length;
    throw table_unavailable_error(msg.str());
}

} // namespace lz76
