#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gtsp/metrics.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

/// Empty cells (monostate) are written as empty fields / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// An ordered list of labelled fields.
struct ResultRecord {
  std::vector<std::pair<std::string, Cell>> fields;

  void add(std::string key, Cell value) { fields.emplace_back(std::move(key), std::move(value)); }
};

enum class ResultFormat {
  Delimited,       // comma-separated with a header row
  StructuredText,  // JSON
};

std::optional<ResultFormat> parse_result_format(std::string_view s) noexcept;

/// Shortest form is not used: every double is printed with 17 significant
/// digits so the text round-trips bit for bit.
std::string format_double(double v);

/// JSON string literal for `s`, quotes included.
std::string json_quote(const std::string& s);

std::string write_results(const ResultTable& table, ResultFormat format);
std::string write_results(const ResultRecord& record, ResultFormat format);

/// station,component,epoch,value,sigma with absolute epochs in seconds.
/// Re-parses with gtsp_series_schema().
ResultTable series_table(const std::vector<TimeSeries>& series);

ResultRecord to_record(const EvaluationReport& report);

}  // namespace gtsp
