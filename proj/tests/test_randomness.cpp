#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "lz76/enumerate.hpp"
#include "lz76/errors.hpp"
#include "lz76/randomness.hpp"
#include "lz76/rational.hpp"

using namespace lz76;

namespace {

// Reference floor(n / log_alpha(n)) as the largest k with n^k <= alpha^n,
// found by incremental multiplication.
std::size_t threshold_oracle(unsigned alpha, std::size_t n) {
    const big_int bound = ipow(big_int(alpha), n);
    big_int power = 1;
    std::size_t k = 0;
    while (power * n <= bound) {
        power *= n;
        ++k;
    }
    return k;
}

Sequence binary_seq(const std::string& text) {
    return Sequence::from_string(Alphabet::binary(), text);
}

} // namespace

TEST_CASE("default threshold values") {
    CHECK(default_threshold(2, 16) == 4);     // log_2(16) = 4
    CHECK(default_threshold(2, 1024) == 102); // log_2(1024) = 10
    CHECK(default_threshold(3, 9) == 4);      // log_3(9) = 2
    CHECK(default_threshold(2, 17) == 4);
    CHECK(default_threshold(2, 3) == 1);
}

TEST_CASE("default threshold matches the exact-floor oracle") {
    for (const unsigned alpha : {2u, 3u, 4u, 5u}) {
        for (std::size_t n = alpha + 1; n <= 512; ++n)
            CHECK(default_threshold(alpha, n) == threshold_oracle(alpha, n));
    }
    // a few larger spot checks
    CHECK(default_threshold(2, 4096) == threshold_oracle(2, 4096));
    CHECK(default_threshold(3, 2187) == threshold_oracle(3, 2187));
    CHECK(default_threshold(2, 10000) == threshold_oracle(2, 10000));
}

TEST_CASE("degenerate thresholds are refused") {
    CHECK_THROWS_AS(default_threshold(2, 2), degenerate_threshold_error);
    CHECK_THROWS_AS(default_threshold(2, 1), degenerate_threshold_error);
    CHECK_THROWS_AS(default_threshold(3, 3), degenerate_threshold_error);
    CHECK_THROWS_AS(default_threshold(1, 10), invalid_input_error);
}

TEST_CASE("critical probability") {
    const auto tables = enumerate_tables(2, 8);
    CHECK(critical_probability(tables[2], 2) == big_rational(1, 2));
    CHECK(critical_probability(tables[2], 3) == 1);
    CHECK(critical_probability(tables[3], 2) == big_rational(1, 4));

    for (const auto& t : tables) {
        big_rational prev = 0;
        for (std::size_t k = 1; k <= t.length(); ++k) {
            const big_rational p = critical_probability(t, k);
            CHECK(p == t.cdf(k));
            CHECK(p >= prev);
            prev = p;
        }
        CHECK(prev == 1);
    }

    CHECK_THROWS_AS(critical_probability(tables[2], 0), invalid_input_error);
    CHECK_THROWS_AS(critical_probability(tables[2], 4), invalid_input_error);
}

TEST_CASE("critical probability trend at fixed k") {
    // With k fixed at 2 the significance level can only shrink as n grows.
    const auto tables = enumerate_tables(2, 12);
    big_rational prev = 1;
    for (std::size_t n = 2; n <= 12; ++n) {
        const big_rational p = critical_probability(tables[n - 1], 2);
        CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("sequence verdicts") {
    const Sequence example = binary_seq("0011011101110110");
    const Sequence zeros = binary_seq("0000000000000000");

    SUBCASE("default threshold") {
        const TestVerdict v = test_sequence(example);
        CHECK(v.threshold_k == 4);
        CHECK(v.observed_complexity == 5);
        CHECK_FALSE(v.in_critical_set);
        CHECK_FALSE(v.significance.has_value());

        const TestVerdict low = test_sequence(zeros);
        CHECK(low.observed_complexity == 2);
        CHECK(low.in_critical_set);
    }

    SUBCASE("with a distribution table") {
        const CountTable table = enumerate_counts(2, 16);
        const TestVerdict v = test_sequence(zeros, &table);
        REQUIRE(v.significance.has_value());
        CHECK(*v.significance == critical_probability(table, 4));
        CHECK(*v.significance > 0);
        CHECK(*v.significance < 1);
    }

    SUBCASE("threshold at n always flags, with significance one") {
        const CountTable table = enumerate_counts(2, 16);
        CriticalSetSpec spec{2, 16, 16};
        const TestVerdict v = test_sequence(example, spec, &table);
        CHECK(v.in_critical_set);
        REQUIRE(v.significance.has_value());
        CHECK(*v.significance == 1);
    }

    SUBCASE("argument validation") {
        CriticalSetSpec wrong_len{2, 8, 3};
        CHECK_THROWS_AS(test_sequence(example, wrong_len), invalid_input_error);
        CriticalSetSpec wrong_alpha{3, 16, 4};
        CHECK_THROWS_AS(test_sequence(example, wrong_alpha), invalid_input_error);
        CriticalSetSpec zero_k{2, 16, 0};
        CHECK_THROWS_AS(test_sequence(example, zero_k), invalid_input_error);
        CriticalSetSpec huge_k{2, 16, 17};
        CHECK_THROWS_AS(test_sequence(example, huge_k), invalid_input_error);

        const CountTable mismatched = enumerate_counts(2, 8);
        CriticalSetSpec spec{2, 16, 4};
        CHECK_THROWS_AS(test_sequence(example, spec, &mismatched), invalid_input_error);
    }
}

TEST_CASE("verdict consistency on random sequences") {
    std::mt19937 rng(977);
    for (int rep = 0; rep < 500; ++rep) {
        const unsigned alpha = (rep % 2 == 0) ? 2 : 3;
        const Alphabet alphabet(alpha == 2 ? "01" : "012");
        std::uniform_int_distribution<unsigned> sym(0, alpha - 1);
        std::uniform_int_distribution<std::size_t> len(2, 48);
        std::vector<symbol_t> symbols(len(rng));
        for (auto& v : symbols) v = static_cast<symbol_t>(sym(rng));
        const Sequence s(alphabet, std::move(symbols));
        std::uniform_int_distribution<std::size_t> kdist(1, s.length());
        const std::size_t k = kdist(rng);
        const TestVerdict v = test_sequence(s, CriticalSetSpec{alpha, s.length(), k});
        CHECK(v.in_critical_set == (v.observed_complexity <= k));
        CHECK(v.threshold_k == k);
    }
}

TEST_CASE("verdict json") {
    const CountTable table = enumerate_counts(2, 8);
    const Sequence s = binary_seq("00101101");
    const TestVerdict with_sig = test_sequence(s, CriticalSetSpec{2, 8, 3}, &table);
    const std::string doc = verdict_to_json(8, with_sig);
    CHECK(doc.find("\"num\"") != std::string::npos);
    CHECK(doc.find("\"den\"") != std::string::npos);
    CHECK(doc.find("\"in_critical_set\"") != std::string::npos);

    const TestVerdict without = test_sequence(s, CriticalSetSpec{2, 8, 3});
    CHECK(verdict_to_json(8, without).find("\"significance\": null") != std::string::npos);
}
