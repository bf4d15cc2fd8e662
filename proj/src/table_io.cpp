#include "lz76/table_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "lz76/errors.hpp"

namespace lz76 {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kCsvHeader = "alphabet_size,n,k,count,exact_count,total";

std::uint64_t parse_u64(std::string_view field, const char* what, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        std::ostringstream msg;
        msg << "csv line " << line_no << ": bad " << what << " '" << field << "'";
        throw invalid_input_error(msg.str());
    }
    return value;
}

big_int parse_big(std::string_view field, const char* what, std::size_t line_no) {
    try {
        return big_int(std::string(field));
    } catch (const std::exception&) {
        std::ostringstream msg;
        msg << "csv line " << line_no << ": bad " << what << " '" << field << "'";
        throw invalid_input_error(msg.str());
    }
}

struct Row {
    unsigned alphabet_size;
    unsigned n;
    std::size_t k;
    std::uint64_t count;
    std::uint64_t exact_count;
    big_int total;
};

// Rows for one n must cover k = 1..n in order; n groups may appear in any
// order but not repeat.
std::vector<CountTable> assemble(const std::vector<Row>& rows, const char* source) {
    if (rows.empty()) {
        std::ostringstream msg;
        msg << source << ": no table rows found";
        throw invalid_input_error(msg.str());
    }
    std::vector<CountTable> tables;
    std::size_t i = 0;
    while (i < rows.size()) {
        const unsigned alpha = rows[i].alphabet_size;
        const unsigned n = rows[i].n;
        if (alpha != rows[0].alphabet_size) {
            std::ostringstream msg;
            msg << source << ": mixed alphabet sizes " << rows[0].alphabet_size << " and "
                << alpha;
            throw invalid_input_error(msg.str());
        }
        for (const auto& t : tables) {
            if (t.length() == n) {
                std::ostringstream msg;
                msg << source << ": duplicate rows for n=" << n;
                throw invalid_input_error(msg.str());
            }
        }
        CountTable table(alpha, n);
        if (rows[i].total != table.total()) {
            std::ostringstream msg;
            msg << source << ": total " << rows[i].total << " for n=" << n
                << " does not equal " << alpha << "^" << n << " = " << table.total();
            throw invalid_input_error(msg.str());
        }
        for (std::size_t k = 1; k <= n; ++k, ++i) {
            if (i >= rows.size() || rows[i].n != n || rows[i].k != k ||
                rows[i].alphabet_size != alpha) {
                std::ostringstream msg;
                msg << source << ": rows for n=" << n << " must cover k=1.." << n
                    << " in order (missing k=" << k << ")";
                throw invalid_input_error(msg.str());
            }
            if (rows[i].total != table.total()) {
                std::ostringstream msg;
                msg << source << ": inconsistent total within n=" << n;
                throw invalid_input_error(msg.str());
            }
            table.set_counts(k, rows[i].count, rows[i].exact_count);
        }
        if (big_int(table.sum_counts()) != table.total()) {
            std::ostringstream msg;
            msg << source << ": counts for n=" << n << " sum to " << table.sum_counts()
                << ", expected " << table.total();
            throw invalid_input_error(msg.str());
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

} // namespace

std::string tables_to_csv(std::span<const CountTable> tables) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& t : tables) {
        for (std::size_t k = 1; k <= t.length(); ++k) {
            out << t.alphabet_size() << ',' << t.length() << ',' << k << ',' << t.count(k)
                << ',' << t.exact_count(k) << ',' << t.total() << '\n';
        }
    }
    return out.str();
}

std::vector<CountTable> tables_from_csv(std::string_view text) {
    std::vector<Row> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kCsvHeader) {
                std::ostringstream msg;
                msg << "csv line " << line_no << ": expected header '" << kCsvHeader << "'";
                throw invalid_input_error(msg.str());
            }
            saw_header = true;
            continue;
        }
        std::array<std::string_view, 6> fields;
        std::size_t field_count = 0;
        std::size_t start = 0;
        for (std::size_t j = 0; j <= line.size(); ++j) {
            if (j == line.size() || line[j] == ',') {
                if (field_count >= fields.size()) {
                    std::ostringstream msg;
                    msg << "csv line " << line_no << ": too many fields";
                    throw invalid_input_error(msg.str());
                }
                fields[field_count++] = line.substr(start, j - start);
                start = j + 1;
            }
        }
        if (field_count != fields.size()) {
            std::ostringstream msg;
            msg << "csv line " << line_no << ": expected 6 fields, got " << field_count;
            throw invalid_input_error(msg.str());
        }
        Row row;
        row.alphabet_size = static_cast<unsigned>(parse_u64(fields[0], "alphabet_size", line_no));
        row.n = static_cast<unsigned>(parse_u64(fields[1], "n", line_no));
        row.k = parse_u64(fields[2], "k", line_no);
        row.count = parse_u64(fields[3], "count", line_no);
        row.exact_count = parse_u64(fields[4], "exact_count", line_no);
        row.total = parse_big(fields[5], "total", line_no);
        rows.push_back(std::move(row));
    }
    if (!saw_header) throw invalid_input_error("csv: empty input");
    return assemble(rows, "csv");
}

namespace {

ordered_json tables_json_value(std::span<const CountTable> tables) {
    ordered_json doc;
    doc["alphabet_size"] = tables.empty() ? 0 : tables.front().alphabet_size();
    ordered_json list = ordered_json::array();
    for (const auto& t : tables) {
        ordered_json entry;
        entry["n"] = t.length();
        entry["total"] = t.total().str();
        ordered_json counts = ordered_json::array();
        for (std::size_t k = 1; k <= t.length(); ++k) {
            counts.push_back(ordered_json{{"k", k},
                                          {"count", t.count(k)},
                                          {"exact_count", t.exact_count(k)}});
        }
        entry["counts"] = std::move(counts);
        list.push_back(std::move(entry));
    }
    doc["tables"] = std::move(list);
    return doc;
}

} // namespace

std::string tables_to_json(std::span<const CountTable> tables) {
    return tables_json_value(tables).dump(2) + "\n";
}

std::string report_to_json(const DistributionReport& report) {
    ordered_json doc = tables_json_value(report.tables);
    ordered_json ids = ordered_json::array();
    for (const auto& r : report.identities) {
        ids.push_back(ordered_json{{"name", r.name},
                                   {"required", r.required},
                                   {"passed", r.passed},
                                   {"detail", r.detail}});
    }
    doc["identities"] = std::move(ids);
    doc["all_required_passed"] = report.all_required_passed();
    return doc.dump(2) + "\n";
}

std::vector<CountTable> tables_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input_error(std::string("json: ") + e.what());
    }
    std::vector<Row> rows;
    try {
        const unsigned alpha = doc.at("alphabet_size").get<unsigned>();
        for (const auto& entry : doc.at("tables")) {
            const unsigned n = entry.at("n").get<unsigned>();
            const big_int total(entry.at("total").get<std::string>());
            for (const auto& c : entry.at("counts")) {
                Row row;
                row.alphabet_size = alpha;
                row.n = n;
                row.k = c.at("k").get<std::size_t>();
                row.count = c.at("count").get<std::uint64_t>();
                row.exact_count = c.at("exact_count").get<std::uint64_t>();
                row.total = total;
                rows.push_back(std::move(row));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input_error(std::string("json: ") + e.what());
    }
    return assemble(rows, "json");
}

std::vector<CountTable> load_tables(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input_error("cannot open table file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return tables_from_json(text);
    return tables_from_csv(text);
}

} // namespace lz76
