#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lz76/count_table.hpp"
#include "lz76/enumerate.hpp"
#include "lz76/identities.hpp"

namespace lz76 {

// Exact distribution of the complexity random variable for lengths 1..N over
// one alphabet, plus the identity-verification results.
struct DistributionReport {
    unsigned alphabet_size = 0;
    std::vector<CountTable> tables;          // index i holds length i+1
    std::vector<IdentityResult> identities;

    const CountTable& table(unsigned length) const; // throws table_unavailable_error

    big_rational pmf(unsigned length, std::size_t k) const;
    big_rational exact_pmf(unsigned length, std::size_t k) const;
    big_rational cdf(unsigned length, std::size_t k) const;

    bool all_required_passed() const noexcept;
};

// Enumerates lengths 1..max_length and runs every identity check.
DistributionReport build_report(unsigned alphabet_size, unsigned max_length,
                                std::uint64_t budget = kDefaultEnumerationBudget,
                                unsigned workers = 1);

// Table lookup by (alphabet size, length); throws table_unavailable_error.
const CountTable& find_table(std::span<const CountTable> tables,
                             unsigned alphabet_size, unsigned length);

} // namespace lz76
