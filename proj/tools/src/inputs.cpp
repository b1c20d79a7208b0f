// SPDX-License-Identifier: Apache-2.0
#include "inputs.hpp"

#include <span>

namespace fplab::cli {

namespace {

template <class Fn>
auto parsed(const Config& cfg, std::string_view key, Fn fn) {
  const std::string& text = cfg.require(key);
  try {
    return fn(text);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(cfg.origin() + ": key '" + std::string(key) + "': " + e.what());
  }
}

}  // namespace

PiecewiseMap single_map(const Config& cfg, std::string_view key) {
  return parsed(cfg, key, [](const std::string& t) { return parse_single(t); });
}

PiecewiseSetMap set_map(const Config& cfg, std::string_view key) {
  return parsed(cfg, key, [](const std::string& t) { return parse_multi(t); });
}

ClosedSet set_value(const Config& cfg, std::string_view key) {
  return parsed(cfg, key, [](const std::string& t) { return parse_set_expr(t, {}).eval(std::span<const double>{}); });
}

Expr expr_value(const Config& cfg, std::string_view key, std::vector<std::string> variables) {
  return parsed(cfg, key, [&variables](const std::string& t) { return parse_expr(t, variables); });
}

SetExpr set_expr_value(const Config& cfg, std::string_view key, std::vector<std::string> variables) {
  return parsed(cfg, key, [&variables](const std::string& t) { return parse_set_expr(t, variables); });
}

HybridPair pair_from(const Config& cfg, std::string_view map_key) {
  PiecewiseMap f = single_map(cfg, map_key);
  PiecewiseSetMap t = set_map(cfg, "T");
  try {
    return HybridPair(std::move(f), std::move(t));
  } catch (const Error& e) {
    throw ConfigError(cfg.origin() + ": (" + std::string(map_key) + ", T): " + e.what());
  }
}

}  // namespace fplab::cli
