// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bundled_configs.hpp"
#include "fplab/expr.hpp"

namespace fplab::cli {

const std::vector<std::string_view>& known_keys() {
  static const std::vector<std::string_view> keys = {
      // shared
      "name", "grid", "tol", "max_iters", "threads", "seed", "samples", "exact",
      // hybrid pairs and certification
      "f", "g", "T", "condition", "form", "F", "phi", "tau", "p", "lambda", "alpha", "beta", "gamma", "delta",
      "resolution",
      // dynamic programming
      "W", "D", "W_points", "D_points", "G1", "G2", "h0", "check_tau", "check_phi", "value_lo", "value_hi",
      // integral inclusion
      "q", "k", "sigma", "n", "rule", "lower", "upper", "x_lo", "x_hi", "h3"};
  return keys;
}

namespace {

bool is_known(std::string_view key) {
  const auto& keys = known_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Config Config::parse(std::string_view text, std::string origin) {
  Config cfg;
  cfg.origin_ = std::move(origin);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto where = cfg.origin_ + ":" + std::to_string(line_no) + ": ";

    if (std::isspace(static_cast<unsigned char>(line.front()))) {
      if (cfg.entries_.empty()) throw ConfigError(where + "continuation line without a key");
      cfg.entries_.back().second += " " + body;
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ConfigError(where + "expected 'key: value'");
    const std::string key = trim(std::string_view(body).substr(0, colon));
    const std::string value = trim(std::string_view(body).substr(colon + 1));
    if (!is_known(key)) throw ConfigError(where + "unknown key '" + key + "'");
    if (cfg.has(key)) throw ConfigError(where + "duplicate key '" + key + "'");
    cfg.entries_.emplace_back(key, value);
  }
  for (const auto& [key, value] : cfg.entries_)
    if (value.empty()) throw ConfigError(cfg.origin_ + ": key '" + key + "' has an empty value");
  return cfg;
}

bool Config::has(std::string_view key) const {
  return std::any_of(entries_.begin(), entries_.end(), [key](const auto& e) { return e.first == key; });
}

std::optional<std::string> Config::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& Config::require(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw ConfigError(origin_ + ": missing required key '" + std::string(key) + "'");
}

double Config::number(std::string_view key) const {
  const std::string& text = require(key);
  try {
    return parse_expr(text, {}).eval(std::span<const double>{});
  } catch (const Error& e) {
    throw ConfigError(origin_ + ": key '" + std::string(key) + "': " + e.what());
  }
}

double Config::number_or(std::string_view key, double fallback) const { return has(key) ? number(key) : fallback; }

std::size_t Config::count(std::string_view key) const {
  const std::string& text = require(key);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError(origin_ + ": key '" + std::string(key) + "' must be a non-negative integer");
  return out;
}

std::size_t Config::count_or(std::string_view key, std::size_t fallback) const {
  return has(key) ? count(key) : fallback;
}

void Config::set(std::string_view key, std::string value) {
  if (!is_known(key)) throw ConfigError("unknown key '" + std::string(key) + "'");
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  entries_.emplace_back(std::string(key), std::move(value));
}

std::string_view bundled_config(std::string_view name) {
  for (const auto& entry : bundled::entries)
    if (entry.name == name) return entry.text;
  throw ConfigError("no bundled config named '" + std::string(name) + "'");
}

std::vector<std::string_view> bundled_names() {
  std::vector<std::string_view> out;
  for (const auto& entry : bundled::entries) out.push_back(entry.name);
  return out;
}

Config load_config(const std::string& path) {
  constexpr std::string_view prefix = "bundled:";
  if (path.starts_with(prefix)) {
    const std::string_view name = std::string_view(path).substr(prefix.size());
    return Config::parse(bundled_config(name), path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return Config::parse(text.str(), path);
}

}  // namespace fplab::cli
