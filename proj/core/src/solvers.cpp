// SPDX-License-Identifier: Apache-2.0
#include "fplab/solvers.hpp"

#include <cmath>
#include <limits>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"
#include "fplab/sampling.hpp"

namespace fplab {

const char* to_string(Termination termination) {
  switch (termination) {
    case Termination::converged: return "converged";
    case Termination::max_iters: return "max-iters";
    case Termination::stuck: return "stuck";
  }
  return "?";
}

namespace {

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ParameterError("tolerance must be positive");
}

void require_in_domain(const ClosedSet& domain, double x, const char* what) {
  if (!domain.contains(x)) throw DomainError(std::string(what) + " " + format_real(x) + " is outside the domain");
}

}  // namespace

OrbitTrace picard_multivalued(const PiecewiseSetMap& t, double x0, const IterationOptions& options) {
  require_tol(options.tol);
  require_in_domain(t.domain(), x0, "starting point");
  OrbitTrace trace;
  double x = x0;
  for (std::size_t n = 0; n < options.max_iters; ++n) {
    const double y = nearest_point(x, t(x));
    const double step = std::abs(y - x);
    trace.iterates.push_back({x, y, step});
    if (step <= options.tol) {
      trace.termination = Termination::converged;
      // The orbit rests at x; x itself is the reported point.
      break;
    }
    require_in_domain(t.domain(), y, "iterate");
    x = y;
  }
  trace.final_point = x;
  trace.residual = point_set_distance(x, t(x));
  return trace;
}

std::vector<double> step_ratios(const OrbitTrace& trace) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i) {
    const double den = trace.iterates[i].step;
    if (den > 1e-12) out.push_back(trace.iterates[i + 1].step / den);
  }
  return out;
}

JungckResult jungck_hybrid(const HybridPair& pair, double x0, const JungckOptions& options) {
  require_tol(options.tol);
  require_in_domain(pair.domain(), x0, "starting point");
  const auto bps = pair.breakpoints();
  const auto grid = pair.kind() == SpaceKind::finite
                        ? pair.domain().endpoints()
                        : sample_points(pair.domain(), bps, SampleGrid{std::max<std::size_t>(options.grid_points, 2), 1e-9});
  std::vector<double> fgrid;
  fgrid.reserve(grid.size());
  for (double x : grid) fgrid.push_back(pair.f()(x));

  auto defect = [&pair](double x) { return point_set_distance(pair.f()(x), pair.t()(x)); };

  JungckResult result;
  OrbitTrace& trace = result.trace;
  double x = x0;
  double current = defect(x);
  double best = current;
  std::size_t idle = 0;
  if (current <= options.tol) {
    trace.termination = Termination::converged;
  } else {
    trace.termination = Termination::max_iters;
    for (std::size_t n = 0; n < options.max_iters; ++n) {
      const ClosedSet target = pair.t()(x);
      std::size_t pick = 0;
      double pick_d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = point_set_distance(fgrid[i], target);
        if (d < pick_d || (d == pick_d && std::abs(grid[i] - x) < std::abs(grid[pick] - x))) {
          pick = i;
          pick_d = d;
        }
      }
      const double next = grid[pick];
      trace.iterates.push_back({x, fgrid[pick], std::abs(next - x)});
      x = next;
      current = defect(x);
      if (current <= options.tol) {
        trace.termination = Termination::converged;
        break;
      }
      if (current < best) {
        best = current;
        idle = 0;
      } else if (++idle >= options.patience) {
        trace.termination = Termination::stuck;
        break;
      }
    }
  }
  trace.final_point = x;
  trace.residual = current;
  if (trace.termination == Termination::converged) result.coincidence = x;
  return result;
}

}  // namespace fplab
