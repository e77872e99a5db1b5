#include "gtsp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gtsp/error.hpp"

namespace gtsp {
namespace {

constexpr double kSecondsPerDay = 86400.0;
constexpr double kDaysPerYear = 365.25;

std::vector<std::string_view> split_fields(std::string_view line, std::optional<char> delim) {
  std::vector<std::string_view> out;
  if (!delim) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back(line.substr(start, i - start));
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(*delim, start);
    std::string_view field = line.substr(start, pos == std::string_view::npos ? pos : pos - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    out.push_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> to_number(std::string_view field) {
  if (field.empty()) return std::nullopt;
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') return std::nullopt;
  return v;
}

struct Lines {
  std::string_view text;
  std::size_t number = 0;

  bool next(std::string_view& line) {
    if (text.empty()) return false;
    const std::size_t nl = text.find('\n');
    line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    return true;
  }
};

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct SeriesKey {
  std::string station;
  Component component;
  auto operator<=>(const SeriesKey&) const = default;
};

struct RawSeries {
  std::vector<double> epochs;  // absolute seconds
  std::vector<double> values;
  std::vector<std::optional<double>> sigmas;
};

double nominal_interval(const std::vector<double>& epochs) {
  std::vector<double> diffs;
  for (std::size_t i = 1; i < epochs.size(); ++i) {
    const double d = epochs[i] - epochs[i - 1];
    if (d > 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) return kSecondsPerDay;
  std::nth_element(diffs.begin(), diffs.begin() + diffs.size() / 2, diffs.end());
  return diffs[diffs.size() / 2];
}

}  // namespace

std::optional<EpochUnit> parse_epoch_unit(std::string_view s) noexcept {
  if (s == "decimal_year" || s == "decyear") return EpochUnit::DecimalYear;
  if (s == "mjd") return EpochUnit::Mjd;
  if (s == "seconds" || s == "s") return EpochUnit::Seconds;
  return std::nullopt;
}

double epoch_to_seconds(double epoch, EpochUnit unit) noexcept {
  switch (unit) {
    case EpochUnit::DecimalYear: return epoch * kDaysPerYear * kSecondsPerDay;
    case EpochUnit::Mjd: return epoch * kSecondsPerDay;
    case EpochUnit::Seconds: return epoch;
  }
  return epoch;
}

void SeriesFileSchema::validate() const {
  std::vector<std::size_t> used{epoch_column};
  if (station_column) used.push_back(*station_column);
  if (long_layout()) {
    if (!components.empty()) throw Error(ErrorCode::InvalidSchema, "mixes long and wide layouts");
    used.push_back(*component_column);
    used.push_back(value_column);
    if (sigma_column) used.push_back(*sigma_column);
  } else {
    if (components.empty()) throw Error(ErrorCode::InvalidSchema, "no value columns");
    std::set<Component> seen;
    for (const auto& c : components) {
      if (!seen.insert(c.component).second) {
        throw Error(ErrorCode::InvalidSchema, "component listed twice");
      }
      used.push_back(c.value);
      if (c.offset) used.push_back(*c.offset);
      if (c.sigma) used.push_back(*c.sigma);
    }
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw Error(ErrorCode::InvalidSchema, "column index used twice");
  }
  if (sampling_interval && !(*sampling_interval > 0.0)) {
    throw Error(ErrorCode::InvalidSchema, "sampling_interval must be positive");
  }
}

SeriesFileSchema SeriesFileSchema::from_config(const KeyValueConfig& kv) {
  SeriesFileSchema s;
  s.name = kv.get_string("schema_name", "custom");
  if (const auto d = kv.get("delimiter")) {
    if (*d == "whitespace" || d->empty()) s.delimiter.reset();
    else if (*d == "comma") s.delimiter = ',';
    else if (*d == "tab") s.delimiter = '\t';
    else if (*d == "semicolon") s.delimiter = ';';
    else if (d->size() == 1) s.delimiter = (*d)[0];
    else throw Error(ErrorCode::InvalidSchema, "delimiter = " + *d);
  }
  s.header_lines = kv.get_size("header_lines", 0);
  s.epoch_column = kv.get_size("epoch_column", 0);
  if (const auto u = kv.get("epoch_unit")) {
    const auto unit = parse_epoch_unit(*u);
    if (!unit) throw Error(ErrorCode::InvalidSchema, "epoch_unit = " + *u);
    s.epoch_unit = *unit;
  }
  if (kv.contains("station_column")) s.station_column = kv.get_size("station_column", 0);
  s.station_id = kv.get_string("station_id", s.station_id);
  if (kv.contains("sampling_interval")) s.sampling_interval = kv.get_double("sampling_interval", 0.0);
  if (kv.contains("component_column")) {
    s.component_column = kv.get_size("component_column", 0);
    s.value_column = kv.get_size("value_column", 1);
    if (kv.contains("sigma_column")) s.sigma_column = kv.get_size("sigma_column", 0);
  }
  for (Component c : {Component::X, Component::Y, Component::Z, Component::E, Component::N,
                      Component::U}) {
    const std::string prefix(to_string(c));
    const std::string value_key = prefix + "_value";
    if (!kv.contains(value_key)) continue;
    ComponentColumns cc;
    cc.component = c;
    cc.value = kv.get_size(value_key, 0);
    if (kv.contains(prefix + "_offset")) cc.offset = kv.get_size(prefix + "_offset", 0);
    if (kv.contains(prefix + "_sigma")) cc.sigma = kv.get_size(prefix + "_sigma", 0);
    s.components.push_back(cc);
  }
  s.validate();
  return s;
}

SeriesFileSchema ngl_tenv3_schema() {
  // site YYMMMDD yyyy.yyyy __MJD week d reflon _e0(m) __east(m) ____n0(m) _north(m)
  // u0(m) ____up(m) _ant(m) sig_e(m) sig_n(m) sig_u(m) __corr_en __corr_eu __corr_nu
  // _latitude(deg) _longitude(deg) __height(m)
  SeriesFileSchema s;
  s.name = "ngl-tenv3/1";
  s.delimiter.reset();
  s.header_lines = 0;
  s.epoch_column = 3;
  s.epoch_unit = EpochUnit::Mjd;
  s.station_column = 0;
  s.components = {
      {Component::E, 8, 7, 14},
      {Component::N, 10, 9, 15},
      {Component::U, 12, 11, 16},
  };
  s.sampling_interval = kSecondsPerDay;
  return s;
}

SeriesFileSchema gtsp_series_schema() {
  SeriesFileSchema s;
  s.name = "gtsp-series/1";
  s.delimiter = ',';
  s.header_lines = 1;
  s.station_column = 0;
  s.component_column = 1;
  s.epoch_column = 2;
  s.epoch_unit = EpochUnit::Seconds;
  s.value_column = 3;
  s.sigma_column = 4;
  return s;
}

std::vector<TimeSeries> parse_delimited(std::string_view text, const SeriesFileSchema& schema) {
  schema.validate();
  Lines lines{text};
  std::string_view line;
  for (std::size_t h = 0; h < schema.header_lines; ++h) {
    if (!lines.next(line)) break;
  }

  std::vector<SeriesKey> order;
  std::map<SeriesKey, RawSeries> raw;
  auto series_for = [&](SeriesKey key) -> RawSeries& {
    auto [it, inserted] = raw.try_emplace(key);
    if (inserted) order.push_back(std::move(key));
    return it->second;
  };

  while (lines.next(line)) {
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, schema.delimiter);
    const std::size_t line_no = lines.number;
    auto field = [&](std::size_t col) -> std::string_view {
      if (col >= fields.size()) {
        throw Error(ErrorCode::SchemaMismatch, "line " + std::to_string(line_no) + ": column " +
                                                   std::to_string(col) + " of " +
                                                   std::to_string(fields.size()));
      }
      return fields[col];
    };
    auto number = [&](std::size_t col) {
      const auto v = to_number(field(col));
      if (!v) {
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": column " +
                                                  std::to_string(col) + " '" +
                                                  std::string(field(col)) + "'");
      }
      return *v;
    };
    auto optional_number = [&](std::size_t col) -> std::optional<double> {
      if (field(col).empty()) return std::nullopt;
      return number(col);
    };

    const double epoch = epoch_to_seconds(number(schema.epoch_column), schema.epoch_unit);
    const std::string station =
        schema.station_column ? std::string(field(*schema.station_column)) : schema.station_id;

    if (schema.long_layout()) {
      const auto comp = parse_component(field(*schema.component_column));
      if (!comp) {
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                                  ": unknown component '" +
                                                  std::string(field(*schema.component_column)) + "'");
      }
      RawSeries& rs = series_for({station, *comp});
      rs.epochs.push_back(epoch);
      rs.values.push_back(number(schema.value_column));
      rs.sigmas.push_back(schema.sigma_column ? optional_number(*schema.sigma_column) : std::nullopt);
    } else {
      for (const auto& cc : schema.components) {
        double value = number(cc.value);
        if (cc.offset) value += number(*cc.offset);
        RawSeries& rs = series_for({station, cc.component});
        rs.epochs.push_back(epoch);
        rs.values.push_back(value);
        rs.sigmas.push_back(cc.sigma ? optional_number(*cc.sigma) : std::nullopt);
      }
    }
  }

  std::vector<TimeSeries> out;
  out.reserve(order.size());
  for (const auto& key : order) {
    const RawSeries& rs = raw.at(key);
    TimeSeries ts;
    ts.station_id = key.station;
    ts.component = key.component;
    ts.origin = rs.epochs.front();
    ts.sampling_interval = schema.sampling_interval.value_or(nominal_interval(rs.epochs));
    ts.samples.reserve(rs.epochs.size());
    for (std::size_t i = 0; i < rs.epochs.size(); ++i) {
      ts.samples.push_back(Sample{rs.epochs[i] - ts.origin, rs.values[i], rs.sigmas[i]});
    }
    out.push_back(validate_series(std::move(ts)));
  }
  return out;
}

std::vector<TimeSeries> parse_ngl(std::string_view text) {
  Lines lines{text};
  std::string_view line;
  std::size_t skipped = 0;
  bool found_data = false;
  while (lines.next(line)) {
    if (blank_or_comment(line)) {
      ++skipped;
      continue;
    }
    const auto fields = split_fields(line, std::nullopt);
    if (!fields.empty() && fields.front() == "site") {
      ++skipped;
      continue;
    }
    // tenv3 rows carry 23 fields; anything narrower is another product.
    if (fields.size() < 17) {
      throw Error(ErrorCode::UnknownFormat,
                  "line " + std::to_string(lines.number) + " has " + std::to_string(fields.size()) +
                      " fields, expected a tenv3 row");
    }
    found_data = true;
    break;
  }
  if (!found_data) throw Error(ErrorCode::UnknownFormat, "no tenv3 data rows");
  SeriesFileSchema schema = ngl_tenv3_schema();
  schema.header_lines = skipped;
  return parse_delimited(text, schema);
}

std::optional<SeriesFormat> parse_series_format(std::string_view s) noexcept {
  if (s == "auto") return SeriesFormat::Auto;
  if (s == "ngl" || s == "tenv3") return SeriesFormat::Ngl;
  if (s == "gtsp" || s == "series") return SeriesFormat::Gtsp;
  if (s == "delimited") return SeriesFormat::Delimited;
  return std::nullopt;
}

std::vector<TimeSeries> parse_series(std::string_view text, SeriesFormat format,
                                     const std::optional<SeriesFileSchema>& schema) {
  if (format == SeriesFormat::Auto) {
    if (schema) {
      format = SeriesFormat::Delimited;
    } else if (text.starts_with("station,component,epoch")) {
      format = SeriesFormat::Gtsp;
    } else {
      format = SeriesFormat::Ngl;
    }
  }
  switch (format) {
    case SeriesFormat::Ngl: return parse_ngl(text);
    case SeriesFormat::Gtsp: return parse_delimited(text, gtsp_series_schema());
    case SeriesFormat::Delimited:
      if (!schema) throw Error(ErrorCode::InvalidSchema, "delimited input needs a schema");
      return parse_delimited(text, *schema);
    case SeriesFormat::Auto: break;
  }
  throw Error(ErrorCode::UnknownFormat, "unresolved series format");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gtsp
