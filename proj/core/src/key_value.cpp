#include "gtsp/key_value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "gtsp/error.hpp"

namespace gtsp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  std::replace(out.begin(), out.end(), '-', '_');
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
      throw Error(ErrorCode::MalformedLine, "config line " + std::to_string(line_no));
    }
    cfg.set(line.substr(0, eq), std::string(trim(line.substr(eq + 1))));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
  const auto it = entries_.find(normalize_key(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KeyValueConfig::set(std::string_view key, std::string value) {
  entries_[normalize_key(key)] = std::move(value);
}

double KeyValueConfig::get_double(std::string_view key, double fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  const std::string s = *v;
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw Error(ErrorCode::InvalidConfig, std::string(key) + " = " + s + " is not a number");
  }
  return d;
}

std::size_t KeyValueConfig::get_size(std::string_view key, std::size_t fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc{} || ptr != v->data() + v->size()) {
    throw Error(ErrorCode::InvalidConfig, std::string(key) + " = " + *v + " is not a count");
  }
  return out;
}

bool KeyValueConfig::get_bool(std::string_view key, bool fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  throw Error(ErrorCode::InvalidConfig, std::string(key) + " = " + *v + " is not a boolean");
}

std::string KeyValueConfig::get_string(std::string_view key, std::string fallback) const {
  return get(key).value_or(std::move(fallback));
}

PipelineConfig apply_pipeline_keys(const KeyValueConfig& kv, PipelineConfig base) {
  base.n = kv.get_size("n", base.n);
  base.f0 = kv.get_double("f0", base.f0);
  if (kv.contains("m")) base.m_fixed = kv.get_size("m", 1);
  base.m_min = kv.get_size("m_min", base.m_min);
  base.m_max = kv.get_size("m_max", base.m_max);
  base.mse_threshold = kv.get_double("mse_threshold", base.mse_threshold);
  base.wavelet = kv.get_string("wavelet", base.wavelet);
  if (const auto p = kv.get("window_policy")) {
    const auto policy = parse_window_policy(*p);
    if (!policy) throw Error(ErrorCode::InvalidConfig, "window_policy = " + *p);
    base.window_policy = *policy;
  }
  base.refit_each_step = kv.get_bool("refit_each_step", base.refit_each_step);
  base.rank_tolerance = kv.get_double("rank_tolerance", base.rank_tolerance);
  return base;
}

}  // namespace gtsp
