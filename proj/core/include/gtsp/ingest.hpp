#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtsp/key_value.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

enum class EpochUnit { DecimalYear, Mjd, Seconds };

std::optional<EpochUnit> parse_epoch_unit(std::string_view s) noexcept;

/// Decimal years use 365.25-day years; MJD uses 86400 s days.
double epoch_to_seconds(double epoch, EpochUnit unit) noexcept;

struct ComponentColumns {
  Component component = Component::U;
  std::size_t value = 0;
  std::optional<std::size_t> offset;  // added to value (integer part split off)
  std::optional<std::size_t> sigma;
};

/// Column layout of a delimited series file. Either wide (one value column
/// per component in `components`) or long (`component_column` labels each
/// row and `value_column`/`sigma_column` hold the numbers).
struct SeriesFileSchema {
  std::string name = "custom";
  std::optional<char> delimiter;  // empty: any run of whitespace
  std::size_t header_lines = 0;
  std::size_t epoch_column = 0;
  EpochUnit epoch_unit = EpochUnit::Seconds;
  std::optional<std::size_t> station_column;
  std::string station_id = "STA";
  std::vector<ComponentColumns> components;
  std::optional<std::size_t> component_column;
  std::size_t value_column = 1;
  std::optional<std::size_t> sigma_column;
  std::optional<double> sampling_interval;

  bool long_layout() const noexcept { return component_column.has_value(); }
  /// Throws InvalidSchema on repeated column indices or an empty layout.
  void validate() const;

  /// Keys: delimiter, header_lines, epoch_column, epoch_unit, station_column,
  /// station_id, sampling_interval, component_column, value_column,
  /// sigma_column, and per component `<C>_value`, `<C>_sigma`, `<C>_offset`.
  static SeriesFileSchema from_config(const KeyValueConfig& kv);
};

/// Frozen layout of the Nevada Geodetic Laboratory `tenv3` daily product
/// (east/north/up with integer and fractional parts split, MJD epochs).
SeriesFileSchema ngl_tenv3_schema();

/// Layout written by series_table(): station,component,epoch,value,sigma.
SeriesFileSchema gtsp_series_schema();

/// One series per station and component, sigmas attached, f0 = 1/86400 Hz
/// implied by the daily sampling interval.
std::vector<TimeSeries> parse_ngl(std::string_view text);

std::vector<TimeSeries> parse_delimited(std::string_view text, const SeriesFileSchema& schema);

enum class SeriesFormat { Auto, Ngl, Gtsp, Delimited };

std::optional<SeriesFormat> parse_series_format(std::string_view s) noexcept;

/// Detects NGL tenv3 and the toolkit's own series table; anything else needs
/// a schema.
std::vector<TimeSeries> parse_series(std::string_view text, SeriesFormat format,
                                     const std::optional<SeriesFileSchema>& schema);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace gtsp
