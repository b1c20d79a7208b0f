// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "emitter.hpp"

namespace fplab::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // violated, not converged, or a failing row
inline constexpr int kExitInput = 2;   // unreadable or invalid input

struct RunOptions {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::size_t> grid;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  Format format = Format::human;
  std::optional<double> p;
  std::optional<double> tau;
  std::optional<std::string> inject_wrong;  // repro-paper self-test
};

/// Each command reads its config (flags override the matching keys), writes
/// its report to `out` and returns an exit code. Input errors propagate as
/// fplab::Error.
int cmd_certify(const Config& cfg, const RunOptions& opts, Emitter& out);
int cmd_pairs(const Config& cfg, const RunOptions& opts, Emitter& out);
int cmd_solve_dp(const Config& cfg, const RunOptions& opts, Emitter& out);
int cmd_solve_volterra(const Config& cfg, const RunOptions& opts, Emitter& out);
int cmd_repro_paper(const RunOptions& opts, Emitter& out);

/// Dispatches on opts.command; maps fplab::Error to a message on `err` and
/// exit code 2.
int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and calls run_command. Usage errors return 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fplab::cli
