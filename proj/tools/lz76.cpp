#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lz76/decode.hpp"
#include "lz76/enumerate.hpp"
#include "lz76/errors.hpp"
#include "lz76/oracle.hpp"
#include "lz76/parse.hpp"
#include "lz76/randomness.hpp"
#include "lz76/report.hpp"
#include "lz76/table_io.hpp"

namespace {

// Exit-code contract: 0 = pass / not suspicious, 1 = usage or decode error,
// 2 = identity violation (verify), 3 = sequence in the critical set (test).
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIdentityViolation = 2;
constexpr int kExitSuspicious = 3;

struct InputOptions {
    std::string inline_text;
    bool has_inline = false;
    std::string file;
    bool has_file = false;
    std::string alphabet_tokens = "01";
    std::string format = "symbols";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* pos = cmd->add_option("input", in.inline_text, "inline input string");
    auto* file = cmd->add_option("--file", in.file, "read input from a file");
    file->excludes(pos);
    cmd->add_option("--alphabet", in.alphabet_tokens,
                    "alphabet tokens in symbol order (default: 01)");
    cmd->add_option("--format", in.format, "input format: symbols|bits|bytes");
    cmd->callback([&in, pos, file] {
        in.has_inline = pos->count() > 0;
        in.has_file = file->count() > 0;
    });
}

std::string read_raw(const InputOptions& in) {
    if (in.has_inline) return in.inline_text;
    if (in.has_file) {
        std::ifstream f(in.file, std::ios::binary);
        if (!f) throw lz76::invalid_input_error("cannot open input file: " + in.file);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    }
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

lz76::Sequence decode_sequence(const InputOptions& in) {
    const lz76::Alphabet alphabet(in.alphabet_tokens);
    return lz76::decode_input(alphabet, lz76::parse_input_format(in.format), read_raw(in));
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw lz76::invalid_input_error("cannot open output file: " + output_path);
    out << text;
}

int run_complexity(const InputOptions& in, bool show_components, bool as_json,
                   const std::string& output_path) {
    const lz76::Sequence seq = decode_sequence(in);
    const lz76::ExhaustiveHistory parsed = lz76::exhaustive_history(seq);
    const std::string text = seq.to_string();
    const auto spans = lz76::component_spans(parsed.history);

    std::ostringstream out;
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["n"] = seq.length();
        doc["complexity"] = parsed.component_count();
        doc["exact"] = parsed.last_component_exhaustive;
        doc["boundaries"] = parsed.history.boundaries;
        auto components = nlohmann::ordered_json::array();
        for (const auto& [begin, end] : spans)
            components.push_back(text.substr(begin - 1, end - begin + 1));
        doc["components"] = std::move(components);
        out << doc.dump(2) << '\n';
    } else {
        out << "n: " << seq.length() << '\n';
        out << "complexity: " << parsed.component_count() << '\n';
        out << "exact: " << (parsed.last_component_exhaustive ? "true" : "false") << '\n';
        if (show_components) {
            out << "components: ";
            for (std::size_t i = 0; i < spans.size(); ++i) {
                if (i > 0) out << '|';
                out << text.substr(spans[i].first - 1, spans[i].second - spans[i].first + 1);
            }
            out << '\n';
            out << "boundaries:";
            for (const std::size_t h : parsed.history.boundaries) out << ' ' << h;
            out << '\n';
        }
    }
    emit(out.str(), output_path);
    return kExitOk;
}

int run_table(const std::string& alphabet_tokens, unsigned nmax, std::uint64_t budget,
              unsigned workers, bool as_json, const std::string& output_path) {
    const lz76::Alphabet alphabet(alphabet_tokens);
    const auto tables = lz76::enumerate_tables(static_cast<unsigned>(alphabet.size()), nmax,
                                               budget, workers);
    emit(as_json ? lz76::tables_to_json(tables) : lz76::tables_to_csv(tables), output_path);
    return kExitOk;
}

int run_verify(const std::string& alphabet_tokens, unsigned nmax, std::uint64_t budget,
               unsigned workers, bool as_json, const std::string& output_path) {
    const lz76::Alphabet alphabet(alphabet_tokens);
    const lz76::DistributionReport report =
        lz76::build_report(static_cast<unsigned>(alphabet.size()), nmax, budget, workers);

    std::ostringstream out;
    if (as_json) {
        out << lz76::report_to_json(report);
    } else {
        out << "alphabet size " << report.alphabet_size << ", lengths 1.." << nmax << '\n';
        for (const auto& r : report.identities) {
            if (r.required)
                out << (r.passed ? "[PASS] " : "[FAIL] ");
            else
                out << "[note] ";
            out << r.name << ": " << r.detail;
            if (!r.required) out << " (reported only, does not affect the exit code)";
            out << '\n';
        }
        out << (report.all_required_passed() ? "result: all required identities hold"
                                             : "result: identity violation detected")
            << '\n';
    }
    emit(out.str(), output_path);
    return report.all_required_passed() ? kExitOk : kExitIdentityViolation;
}

int run_test(const InputOptions& in, std::optional<std::size_t> threshold,
             const std::string& table_path, bool as_json, const std::string& output_path) {
    const lz76::Sequence seq = decode_sequence(in);
    const auto alpha = static_cast<unsigned>(seq.alphabet().size());

    lz76::CriticalSetSpec spec;
    spec.alphabet_size = alpha;
    spec.length = seq.length();
    spec.threshold_k = threshold ? *threshold
                                 : lz76::default_threshold(alpha, seq.length());

    std::vector<lz76::CountTable> tables;
    const lz76::CountTable* table = nullptr;
    std::string table_note;
    if (!table_path.empty()) {
        tables = lz76::load_tables(table_path);
        try {
            table = &lz76::find_table(tables, alpha, static_cast<unsigned>(seq.length()));
        } catch (const lz76::table_unavailable_error& e) {
            table_note = e.what();
        }
    }

    const lz76::TestVerdict verdict = lz76::test_sequence(seq, spec, table);

    std::ostringstream out;
    if (as_json) {
        out << lz76::verdict_to_json(seq.length(), verdict);
    } else {
        out << "n: " << seq.length() << '\n';
        out << "complexity: " << verdict.observed_complexity << '\n';
        out << "threshold: " << verdict.threshold_k << '\n';
        out << "in_critical_set: " << (verdict.in_critical_set ? "true" : "false") << '\n';
        if (verdict.significance) {
            out << "significance: " << verdict.significance->str() << " (~"
                << verdict.significance->convert_to<double>() << ")\n";
        } else if (!table_note.empty()) {
            out << "significance: unavailable (" << table_note << ")\n";
        }
        out << "verdict: "
            << (verdict.in_critical_set ? "suspicious (complexity <= threshold)"
                                        : "consistent with randomness (complexity > threshold)")
            << '\n';
    }
    emit(out.str(), output_path);
    return verdict.in_critical_set ? kExitSuspicious : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lempel-Ziv (1976) sequence complexity: parsing, exact distribution "
                 "tables, identity verification, and randomness testing"};
    app.require_subcommand(1);

    InputOptions cx_in;
    bool cx_components = false;
    bool cx_json = false;
    std::string cx_output;
    auto* cx = app.add_subcommand("complexity",
                                  "parse a sequence and report its complexity and exactness");
    add_input_options(cx, cx_in);
    cx->add_flag("--components", cx_components, "print components and 1-based boundaries");
    cx->add_flag("--json", cx_json, "emit JSON");
    cx->add_option("--output", cx_output, "write output to a file instead of stdout");

    std::string tb_alphabet = "01";
    unsigned tb_nmax = 0;
    std::uint64_t tb_budget = lz76::kDefaultEnumerationBudget;
    unsigned tb_workers = 1;
    bool tb_json = false;
    std::string tb_output;
    auto* tb = app.add_subcommand("table", "enumerate exact complexity distribution tables");
    tb->add_option("--alphabet", tb_alphabet, "alphabet tokens (size >= 2)");
    tb->add_option("--nmax", tb_nmax, "enumerate lengths 1..nmax")->required();
    tb->add_option("--budget", tb_budget, "enumeration budget in sequences");
    tb->add_option("--workers", tb_workers, "enumeration worker threads");
    tb->add_flag("--json", tb_json, "emit JSON instead of CSV");
    tb->add_option("--output", tb_output, "write output to a file instead of stdout");

    std::string vf_alphabet = "01";
    unsigned vf_nmax = 0;
    std::uint64_t vf_budget = lz76::kDefaultEnumerationBudget;
    unsigned vf_workers = 1;
    bool vf_json = false;
    std::string vf_output;
    auto* vf = app.add_subcommand("verify",
                                  "enumerate tables and verify the distribution identities");
    vf->add_option("--alphabet", vf_alphabet, "alphabet tokens (size >= 2)");
    vf->add_option("--nmax", vf_nmax, "enumerate lengths 1..nmax")->required();
    vf->add_option("--budget", vf_budget, "enumeration budget in sequences");
    vf->add_option("--workers", vf_workers, "enumeration worker threads");
    vf->add_flag("--json", vf_json, "emit the JSON report");
    vf->add_option("--output", vf_output, "write output to a file instead of stdout");

    InputOptions ts_in;
    std::size_t ts_threshold = 0;
    std::string ts_table;
    bool ts_json = false;
    std::string ts_output;
    auto* ts = app.add_subcommand("test", "test a sequence against the critical set K_{n,k}");
    add_input_options(ts, ts_in);
    auto* ts_threshold_opt =
        ts->add_option("--threshold", ts_threshold, "explicit critical-set threshold k");
    ts->add_option("--table", ts_table, "distribution table file (CSV or JSON) for the "
                                        "significance level");
    ts->add_flag("--json", ts_json, "emit JSON");
    ts->add_option("--output", ts_output, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cx->parsed())
            return run_complexity(cx_in, cx_components, cx_json, cx_output);
        if (tb->parsed())
            return run_table(tb_alphabet, tb_nmax, tb_budget, tb_workers, tb_json, tb_output);
        if (vf->parsed())
            return run_verify(vf_alphabet, vf_nmax, vf_budget, vf_workers, vf_json, vf_output);
        if (ts->parsed()) {
            std::optional<std::size_t> threshold;
            if (ts_threshold_opt->count() > 0) threshold = ts_threshold;
            return run_test(ts_in, threshold, ts_table, ts_json, ts_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
