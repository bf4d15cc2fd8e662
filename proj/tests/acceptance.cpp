// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. argv[1] must be the path to the lz76 CLI binary (used by the
// criteria that exercise exit codes and file output).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "lz76/enumerate.hpp"
#include "lz76/identities.hpp"
#include "lz76/oracle.hpp"
#include "lz76/parse.hpp"
#include "lz76/randomness.hpp"
#include "lz76/report.hpp"
#include "lz76/table_io.hpp"

using namespace lz76;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& note) {
    std::cout << "criterion " << id << ": " << (passed ? "PASS" : "FAIL") << "  " << name;
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << std::endl;
    if (!passed) ++g_failures;
}

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

Sequence binary_seq(const std::string& text) {
    return Sequence::from_string(Alphabet::binary(), text);
}

Sequence nth_sequence(const Alphabet& alphabet, unsigned n, std::uint64_t index) {
    std::vector<symbol_t> symbols(n);
    for (std::size_t pos = n; pos-- > 0;) {
        symbols[pos] = static_cast<symbol_t>(index % alphabet.size());
        index /= alphabet.size();
    }
    return Sequence(alphabet, std::move(symbols));
}

// Independent greedy parse built on std::string windows: each component is
// the shortest extension absent from the text before its last symbol.
std::vector<std::string> string_based_parse(const std::string& text) {
    std::vector<std::string> components;
    const std::size_t n = text.size();
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t end = pos;
        bool found_new = false;
        while (end < n) {
            const std::string cand = text.substr(pos, end - pos + 1);
            if (text.substr(0, end).find(cand) == std::string::npos) {
                found_new = true;
                break;
            }
            ++end;
        }
        if (!found_new) end = n - 1;
        components.push_back(text.substr(pos, end - pos + 1));
        pos = end + 1;
    }
    return components;
}

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_path(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "." + std::to_string(::getpid()));
}

void criterion_1_worked_example() {
    const auto start = clock_type::now();
    std::ostringstream note;
    bool ok = true;

    const std::string text = "0011011101110110";
    const Sequence s = binary_seq(text);
    const ExhaustiveHistory parsed = exhaustive_history(s);

    ok &= parsed.component_count() == 5;
    ok &= parsed.history.boundaries == std::vector<std::size_t>{1, 3, 5, 8, 16};
    ok &= parsed.last_component_exhaustive;

    std::vector<std::string> components;
    for (const auto& [b, e] : component_spans(parsed.history))
        components.push_back(text.substr(b - 1, e - b + 1));
    const std::vector<std::string> expected{"0", "01", "10", "111", "01110110"};
    ok &= components == expected;
    ok &= string_based_parse(text) == expected;
    ok &= min_history_complexity(s) == 5;

    const double elapsed = ms_since(start);
    ok &= elapsed < 100.0;
    note << "boundaries 1,3,5,8,16; exact; " << elapsed << " ms";
    report(1, "worked-example parse", ok, note.str());
}

void criterion_2_oracle_equivalence() {
    const auto start = clock_type::now();
    std::uint64_t mismatches = 0;
    std::uint64_t checked = 0;

    const Alphabet binary = Alphabet::binary();
    for (unsigned n = 1; n <= 10; ++n) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            const Sequence s = nth_sequence(binary, n, idx);
            if (complexity(s) != min_history_complexity(s)) ++mismatches;
            ++checked;
        }
    }
    const Alphabet ternary("012");
    for (unsigned n = 1; n <= 6; ++n) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < n; ++i) count *= 3;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            const Sequence s = nth_sequence(ternary, n, idx);
            if (complexity(s) != min_history_complexity(s)) ++mismatches;
            ++checked;
        }
    }

    const double elapsed = ms_since(start);
    const bool ok = mismatches == 0 && elapsed < 120000.0;
    std::ostringstream note;
    note << checked << " sequences, " << mismatches << " mismatches, " << elapsed << " ms";
    report(2, "greedy parse equals minimal-history search", ok, note.str());
}

struct Families {
    std::vector<CountTable> base2;  // lengths 1..12
    std::vector<CountTable> base3;  // lengths 1..8
    std::vector<CountTable> base4;  // lengths 1..6
};

void criterion_3_step_recurrence(const Families& fam) {
    bool ok = true;
    std::string first_failure;
    const auto check_family = [&](const std::vector<CountTable>& tables, unsigned pairs) {
        for (unsigned n = 1; n <= pairs; ++n) {
            const IdentityResult r = verify_step_recurrence(tables[n - 1], tables[n]);
            if (!r.passed) {
                ok = false;
                if (first_failure.empty()) first_failure = r.detail;
            }
        }
    };
    check_family(fam.base2, 11);
    check_family(fam.base3, 7);
    check_family(fam.base4, 5);
    report(3, "one-step count recurrence, exact integers",
           ok, ok ? "alpha=2 n=1..11, alpha=3 n=1..7, alpha=4 n=1..5" : first_failure);
}

void criterion_4_cdf_identity_and_extension(const Families& fam) {
    bool ok = true;
    std::string note = "cdf identity and one-step extension exact on all three families";
    for (const auto* tables : {&fam.base2, &fam.base3, &fam.base4}) {
        const IdentityResult identity = verify_cdf_exact_mass_identity(*tables);
        const IdentityResult extension = verify_cdf_extension(*tables);
        if (!identity.passed) { ok = false; note = identity.detail; break; }
        if (!extension.passed) { ok = false; note = extension.detail; break; }
    }
    if (fam.base2[2].cdf(2) != big_rational(1, 2)) { ok = false; note = "P_3(C<=2) != 1/2"; }
    if (fam.base2[3].cdf(2) != big_rational(1, 4)) { ok = false; note = "P_4(C<=2) != 1/4"; }
    report(4, "cdf identity and one-step extension", ok, note);
}

void criterion_5_monotonicity(const Families& fam) {
    bool ok = true;
    std::string note = "P_{n+1}(C<=k) <= P_n(C<=k) across all enumerated lengths";
    for (const auto* tables : {&fam.base2, &fam.base3, &fam.base4}) {
        const IdentityResult r = verify_cdf_monotone_in_length(*tables);
        if (!r.passed) { ok = false; note = r.detail; break; }
    }
    report(5, "cdf monotone in length", ok, note);
}

void criterion_6_partial_sums(const Families& fam) {
    bool ok = true;
    std::ostringstream note;

    for (std::size_t k = 1; k <= 12 && ok; ++k) {
        big_rational prev = 0;
        for (std::size_t N = 1; N <= fam.base2.size(); ++N) {
            const big_rational cur =
                exact_mass_partial_sum(std::span(fam.base2).first(N), k);
            if (cur < prev || cur > 1) { ok = false; break; }
            prev = cur;
        }
    }

    const big_rational at_10 = exact_mass_partial_sum(std::span(fam.base2).first(10), 2);
    ok &= at_10 == big_rational(511, 512);
    ok &= at_10 >= big_rational(95, 100);
    note << "sum_{r=1..10} P_r(2_e) = " << at_10 << " >= 0.95; monotone and <= 1 for k=1..12";
    report(6, "exact-mass partial sums", ok, note.str());
}

void criterion_7_side_condition_report(const std::string& cli) {
    bool ok = true;
    std::ostringstream note;

    const auto out = temp_path("lz76_acceptance_verify.json");
    const int code = run_cli(cli, "verify --nmax 4 --json --output \"" + out.string() + "\"");
    ok &= code == 0;

    try {
        const auto doc = nlohmann::json::parse(slurp(out));
        bool saw_full_length = false;
        bool saw_tail = false;
        for (const auto& entry : doc.at("identities")) {
            const std::string name = entry.at("name").get<std::string>();
            const std::string detail = entry.at("detail").get<std::string>();
            const bool required = entry.at("required").get<bool>();
            const bool passed = entry.at("passed").get<bool>();
            if (required && !passed) ok = false;
            if (name == "claim_full_length_exact_mass_vanishes") {
                saw_full_length = !required && !passed &&
                                  detail.find("n=2") != std::string::npos &&
                                  detail.find("1/2") != std::string::npos;
            }
            if (name == "claim_tail_mass_vanishes") {
                saw_tail = !required && !passed &&
                           detail.find("P_3(3) = 1/2") != std::string::npos;
            }
        }
        ok &= saw_full_length && saw_tail;
        ok &= doc.at("all_required_passed").get<bool>();
    } catch (const std::exception& e) {
        ok = false;
        note << "report parse failed: " << e.what() << "; ";
    }
    std::filesystem::remove(out);

    note << "verify exit=" << code
         << "; records sum_{r=1..2} P_r(2_e)=1/2 and P_3(3)=1/2 while required identities pass";
    report(7, "proof side conditions reported, not required", ok, note.str());
}

void criterion_8_randomness_exit_codes(const std::string& cli) {
    bool ok = true;
    std::ostringstream note;

    // Library-level: default threshold 4 at (alpha=2, n=16).
    ok &= default_threshold(2, 16) == 4;
    const TestVerdict zeros = test_sequence(binary_seq("0000000000000000"));
    ok &= zeros.observed_complexity == 2 && zeros.in_critical_set;
    const TestVerdict example = test_sequence(binary_seq("0011011101110110"));
    ok &= example.observed_complexity == 5 && !example.in_critical_set;

    // Exit-code contract: 3 = in critical set, 0 = not, 1 = degenerate
    // threshold without an explicit k.
    const int suspicious = run_cli(cli, "test 0000000000000000");
    const int passing = run_cli(cli, "test 0011011101110110");
    const int degenerate = run_cli(cli, "test 01");
    ok &= suspicious == 3 && passing == 0 && degenerate == 1;

    note << "all-zeros c=2<=4 exit=" << suspicious << ", example c=5>4 exit=" << passing
         << ", n<=alpha exit=" << degenerate;
    report(8, "randomness test and exit codes", ok, note.str());
}

void criterion_9_parallel_merge(const std::string& cli, const Families& fam) {
    bool ok = true;
    std::ostringstream note;

    const CountTable serial = enumerate_counts(2, 12, kDefaultEnumerationBudget, 1);
    const CountTable parallel = enumerate_counts(2, 12, kDefaultEnumerationBudget, 8);
    ok &= serial == parallel;
    ok &= serial == fam.base2[11];

    const std::vector<CountTable> one{serial};
    const std::vector<CountTable> eight{parallel};
    ok &= tables_to_csv(one) == tables_to_csv(eight);

    const auto csv1 = temp_path("lz76_acceptance_w1.csv");
    const auto csv8 = temp_path("lz76_acceptance_w8.csv");
    const int code1 =
        run_cli(cli, "table --nmax 12 --workers 1 --output \"" + csv1.string() + "\"");
    const int code8 =
        run_cli(cli, "table --nmax 12 --workers 8 --output \"" + csv8.string() + "\"");
    ok &= code1 == 0 && code8 == 0;
    const std::string bytes1 = slurp(csv1);
    ok &= !bytes1.empty() && bytes1 == slurp(csv8);
    std::filesystem::remove(csv1);
    std::filesystem::remove(csv8);

    note << "1 vs 8 workers at alpha=2, n=12: identical tables, byte-identical CSV";
    report(9, "parallel enumeration merges exactly", ok, note.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-lz76-cli>" << std::endl;
        return 2;
    }
    const std::string cli = argv[1];

    criterion_1_worked_example();
    criterion_2_oracle_equivalence();

    Families fam;
    fam.base2 = enumerate_tables(2, 12);
    fam.base3 = enumerate_tables(3, 8);
    fam.base4 = enumerate_tables(4, 6);

    criterion_3_step_recurrence(fam);
    criterion_4_cdf_identity_and_extension(fam);
    criterion_5_monotonicity(fam);
    criterion_6_partial_sums(fam);
    criterion_7_side_condition_report(cli);
    criterion_8_randomness_exit_codes(cli);
    criterion_9_parallel_merge(cli, fam);

    if (g_failures == 0) {
        std::cout << "RESULT: 9/9 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "RESULT: " << 9 - g_failures << "/9 criteria passed, " << g_failures
              << " failed" << std::endl;
    return 1;
}
