// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "fplab/closed_set.hpp"
#include "fplab/expr.hpp"
#include "fplab/hybrid.hpp"
#include "fplab/piecewise.hpp"

namespace fplab::cli {

// Typed views of config values. Parse failures become ConfigError naming
// the config and key.

[[nodiscard]] PiecewiseMap single_map(const Config& cfg, std::string_view key);
[[nodiscard]] PiecewiseSetMap set_map(const Config& cfg, std::string_view key);
[[nodiscard]] ClosedSet set_value(const Config& cfg, std::string_view key);
[[nodiscard]] Expr expr_value(const Config& cfg, std::string_view key, std::vector<std::string> variables);
[[nodiscard]] SetExpr set_expr_value(const Config& cfg, std::string_view key, std::vector<std::string> variables);

/// (map_key, T) from the config.
[[nodiscard]] HybridPair pair_from(const Config& cfg, std::string_view map_key = "f");

}  // namespace fplab::cli
