// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fplab/errors.hpp"

namespace fplab::cli {

/// Malformed or incomplete run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// "key: value" lines. '#' starts a comment, blank lines are ignored and a
/// line starting with whitespace continues the previous value. Keys must be
/// known (see known_keys()) and may appear once.
class Config {
 public:
  static Config parse(std::string_view text, std::string origin = "<config>");

  [[nodiscard]] const std::string& origin() const noexcept { return origin_; }
  [[nodiscard]] bool has(std::string_view key) const;
  [[nodiscard]] std::optional<std::string> get(std::string_view key) const;
  /// Throws ConfigError when the key is missing.
  [[nodiscard]] const std::string& require(std::string_view key) const;

  /// Scalar values are constant expressions, so "1/5" and "ln(2)" work.
  [[nodiscard]] double number(std::string_view key) const;
  [[nodiscard]] double number_or(std::string_view key, double fallback) const;
  /// Non-negative integers.
  [[nodiscard]] std::size_t count(std::string_view key) const;
  [[nodiscard]] std::size_t count_or(std::string_view key, std::size_t fallback) const;

  /// Replaces or adds a value; the key must be known.
  void set(std::string_view key, std::string value);

  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

 private:
  std::string origin_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

[[nodiscard]] const std::vector<std::string_view>& known_keys();

/// Reads `path`, or the bundled config NAME for "bundled:NAME".
[[nodiscard]] Config load_config(const std::string& path);

/// Text of a bundled config; throws ConfigError for an unknown name.
[[nodiscard]] std::string_view bundled_config(std::string_view name);
[[nodiscard]] std::vector<std::string_view> bundled_names();

}  // namespace fplab::cli
