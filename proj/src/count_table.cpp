#include "lz76/count_table.hpp"

#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

CountTable::CountTable(unsigned alphabet_size, unsigned length)
    : alphabet_size_(alphabet_size),
      length_(length),
      total_(ipow(big_int(alphabet_size), length)),
      counts_(length + 1, 0),
      exact_counts_(length + 1, 0) {
    if (alphabet_size < 2)
        throw invalid_input_error("count tables require an alphabet of size >= 2");
    if (length < 1)
        throw invalid_input_error("count tables require length >= 1");
}

std::uint64_t CountTable::count(std::size_t k) const noexcept {
    return (k >= 1 && k <= length_) ? counts_[k] : 0;
}

std::uint64_t CountTable::exact_count(std::size_t k) const noexcept {
    return (k >= 1 && k <= length_) ? exact_counts_[k] : 0;
}

std::uint64_t CountTable::cumulative_count(std::size_t k) const noexcept {
    std::uint64_t sum = 0;
    for (std::size_t s = 1; s <= k && s <= length_; ++s) sum += counts_[s];
    return sum;
}

std::uint64_t CountTable::sum_counts() const noexcept {
    return cumulative_count(length_);
}

void CountTable::record(std::size_t k, bool exact) {
    if (k < 1 || k > length_)
        throw invalid_input_error("complexity outside 1..n cannot be recorded");
    ++counts_[k];
    if (exact) ++exact_counts_[k];
}

void CountTable::set_counts(std::size_t k, std::uint64_t cnt, std::uint64_t exact_cnt) {
    if (k < 1 || k > length_)
        throw invalid_input_error("complexity outside 1..n cannot be set");
    if (exact_cnt > cnt)
        throw invalid_input_error("exact count cannot exceed the sequence count");
    counts_[k] = cnt;
    exact_counts_[k] = exact_cnt;
}

void CountTable::merge(const CountTable& other) {
    if (other.alphabet_size_ != alphabet_size_ || other.length_ != length_)
        throw invalid_input_error("cannot merge count tables with different alphabet or length");
    for (std::size_t k = 1; k <= length_; ++k) {
        counts_[k] += other.counts_[k];
        exact_counts_[k] += other.exact_counts_[k];
    }
}

big_rational CountTable::pmf(std::size_t k) const {
    return big_rational(big_int(count(k)), total_);
}

big_rational CountTable::exact_pmf(std::size_t k) const {
    return big_rational(big_int(exact_count(k)), total_);
}

big_rational CountTable::cdf(std::size_t k) const {
    return big_rational(big_int(cumulative_count(k)), total_);
}

bool CountTable::operator==(const CountTable& other) const noexcept {
    return alphabet_size_ == other.alphabet_size_ && length_ == other.length_ &&
           counts_ == other.counts_ && exact_counts_ == other.exact_counts_;
}

} // namespace lz76
