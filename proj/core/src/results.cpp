#include "gtsp/results.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "gtsp/error.hpp"

namespace gtsp {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else return csv_escape(v);
      },
      c);
}

std::string json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "null";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? format_double(v) : "null";
        } else return json_escape(v);
      },
      c);
}

}  // namespace

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::LengthMismatch, "row width differs from header");
  }
  rows.push_back(std::move(row));
}

std::optional<ResultFormat> parse_result_format(std::string_view s) noexcept {
  if (s == "csv" || s == "delimited") return ResultFormat::Delimited;
  if (s == "json" || s == "structured") return ResultFormat::StructuredText;
  return std::nullopt;
}

std::string json_quote(const std::string& s) { return json_escape(s); }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string write_results(const ResultTable& table, ResultFormat format) {
  std::ostringstream os;
  if (format == ResultFormat::Delimited) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      os << (j ? "," : "") << csv_escape(table.columns[j]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
      os << '\n';
    }
    return os.str();
  }
  os << '[';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    os << (i ? ",\n " : "\n ") << '{';
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      os << (j ? ", " : "") << json_escape(table.columns[j]) << ": " << json_cell(table.rows[i][j]);
    }
    os << '}';
  }
  os << (table.rows.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string write_results(const ResultRecord& record, ResultFormat format) {
  if (format == ResultFormat::Delimited) {
    ResultTable t;
    std::vector<Cell> row;
    for (const auto& [k, v] : record.fields) {
      t.columns.push_back(k);
      row.push_back(v);
    }
    t.add_row(std::move(row));
    return write_results(t, format);
  }
  std::ostringstream os;
  os << "{\n";
  for (std::size_t j = 0; j < record.fields.size(); ++j) {
    os << "  " << json_escape(record.fields[j].first) << ": " << json_cell(record.fields[j].second)
       << (j + 1 < record.fields.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

ResultTable series_table(const std::vector<TimeSeries>& series) {
  ResultTable t;
  t.columns = {"station", "component", "epoch", "value", "sigma"};
  for (const auto& ts : series) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const Sample& s = ts.samples[i];
      t.rows.push_back({ts.station_id, std::string(to_string(ts.component)), ts.absolute_epoch(i),
                        s.value, s.sigma ? Cell{*s.sigma} : Cell{}});
    }
  }
  return t;
}

ResultRecord to_record(const EvaluationReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; };
  ResultRecord r;
  r.add("smape", report.smape);
  r.add("mase", opt(report.mase));
  r.add("std", opt(report.std));
  r.add("mae", report.mae);
  r.add("q", static_cast<std::int64_t>(report.q));
  r.add("n", static_cast<std::int64_t>(report.n));
  return r;
}

}  // namespace gtsp
