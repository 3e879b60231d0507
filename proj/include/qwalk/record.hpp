#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qwalk {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kRecordSchema = "qwalk-record/1";

using Cell = std::variant<std::int64_t, double, std::string>;

/// Tabular experiment output with an ordered metadata block.
struct ExperimentRecord {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value);
  void add_meta(std::string key, double value);
  void add_meta(std::string key, std::int64_t value);
  /// Throws std::invalid_argument if the row width differs from columns.
  void add_row(std::vector<Cell> row);
  /// Metadata value or empty string.
  std::string meta(const std::string& key) const;
};

enum class OutputFormat { csv, json };

/// Shortest-roundtrip-safe rendering: %.17g, with nan/inf spelled out.
std::string format_double(double v);

/// CSV layout:
///   # qwalk-record/1 experiment=<name>
///   # <key>=<value>          (one line per metadata entry)
///   <col>,<col>,...
///   <row>...
/// LF line endings; strings containing , " or newline are quoted.
std::string to_csv(const ExperimentRecord& rec);

/// {"schema", "experiment", "metadata": {...}, "columns": [...], "rows": [[...]]}
std::string to_json(const ExperimentRecord& rec);

std::string render(const ExperimentRecord& rec, OutputFormat format);

}  // namespace qwalk
