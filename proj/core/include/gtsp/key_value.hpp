#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gtsp/types.hpp"

namespace gtsp {

/// Flat `key = value` configuration. `#` starts a comment; later keys win.
/// Dashes in keys are read as underscores, so `m-min` and `m_min` agree.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text);
  static KeyValueConfig load(const std::filesystem::path& path);

  std::optional<std::string> get(std::string_view key) const;
  bool contains(std::string_view key) const { return get(key).has_value(); }
  void set(std::string_view key, std::string value);

  double get_double(std::string_view key, double fallback) const;
  std::size_t get_size(std::string_view key, std::size_t fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;
  std::string get_string(std::string_view key, std::string fallback) const;

  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

std::string normalize_key(std::string_view key);

/// Overlays pipeline keys (n, f0, m, m_min, m_max, mse_threshold, wavelet,
/// window_policy, refit_each_step, rank_tolerance) on `base`.
PipelineConfig apply_pipeline_keys(const KeyValueConfig& kv, PipelineConfig base);

}  // namespace gtsp
