#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lz76/count_table.hpp"
#include "lz76/report.hpp"

namespace lz76 {

// CSV schema: header `alphabet_size,n,k,count,exact_count,total`, one row per
// (n, k) with k = 1..n, rows ordered by n then k, LF line endings. Output is
// byte-deterministic for fixed tables.
std::string tables_to_csv(std::span<const CountTable> tables);

// JSON document {"alphabet_size": ..., "tables": [...]}. `total` is a decimal
// string; counts are integers.
std::string tables_to_json(std::span<const CountTable> tables);

// Same document with an "identities" array appended.
std::string report_to_json(const DistributionReport& report);

// Parsers accept exactly what the emitters produce and validate alphabet
// consistency, contiguous k coverage, count sums, and totals. Malformed input
// raises invalid_input_error naming the first bad line or field.
std::vector<CountTable> tables_from_csv(std::string_view text);
std::vector<CountTable> tables_from_json(std::string_view text);

// Reads a table file in either format (sniffed from the first byte).
std::vector<CountTable> load_tables(const std::filesystem::path& path);

} // namespace lz76
