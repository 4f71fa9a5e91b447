#pragma once

#include <string>
#include <vector>

namespace dirac::cli {

enum class OutputFormat { csv, json };

/// Rectangular numeric record set with named columns.  All cells are
/// doubles; integer-valued cells (quantum numbers) print without a decimal
/// point under the %.17g rule and round-trip exactly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Render as CSV: comma separator, '.' decimal point, 17 significant
/// digits, header row first.  Throws std::invalid_argument on ragged rows
/// or non-finite cells.
std::string to_csv(const Table& table);

/// Render as a JSON array of objects mirroring the CSV schema.
std::string to_json(const Table& table);

/// Parse CSV text produced by to_csv back into a Table.
/// Throws std::invalid_argument on malformed input.
Table parse_csv(const std::string& text);

/// Serialize and write to `path`, or to stdout when `path` is empty.
/// Validation errors surface as std::invalid_argument before any write;
/// filesystem failures as std::ios_base::failure.
void emit(const Table& table, OutputFormat format, const std::string& path);

} // namespace dirac::cli
