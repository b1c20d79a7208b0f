// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fplab/hybrid.hpp"
#include "fplab/piecewise.hpp"

namespace fplab {

enum class Termination { converged, max_iters, stuck };

[[nodiscard]] const char* to_string(Termination termination);

/// One step of an orbit: the current point x, the point y of T(x) the step
/// moved towards, and |x_next - x|.
struct Iterate {
  double x = 0.0;
  double y = 0.0;
  double step = 0.0;

  friend bool operator==(const Iterate&, const Iterate&) = default;
};

struct OrbitTrace {
  std::vector<Iterate> iterates;
  Termination termination = Termination::max_iters;
  double final_point = 0.0;
  double residual = 0.0;  // d(x*, T x*) for Picard, d(f v, T v) for Jungck

  friend bool operator==(const OrbitTrace&, const OrbitTrace&) = default;
};

struct IterationOptions {
  double tol = 1e-10;
  std::size_t max_iters = 1000;
};

/// x_{n+1} = nearest point of T(x_n) to x_n (ties to the smaller value),
/// stopping once |x_{n+1} - x_n| <= tol. Throws DomainError when x0 or an
/// iterate leaves the domain, ParameterError for tol <= 0.
[[nodiscard]] OrbitTrace picard_multivalued(const PiecewiseSetMap& t, double x0, const IterationOptions& options = {});

/// |x_{n+2} - x_{n+1}| / |x_{n+1} - x_n| along the trace, skipping
/// denominators at or below 1e-12.
[[nodiscard]] std::vector<double> step_ratios(const OrbitTrace& trace);

struct JungckOptions {
  double tol = 1e-10;
  std::size_t max_iters = 1000;
  std::size_t grid_points = 3001;
  std::size_t patience = 5;  // non-improving steps before giving up
};

struct JungckResult {
  OrbitTrace trace;
  std::optional<double> coincidence;  // v with d(fv, Tv) <= tol
};

/// Chooses x_{n+1} as the grid node (uniform grid plus breakpoints)
/// minimising d(f x, T x_n), ties going to the node closest to x_n and
/// then to the smaller one, and stops once d(f x_{n+1}, T x_{n+1}) <= tol.
/// After `patience` consecutive steps without lowering the best defect the
/// trace ends as stuck. For a Jungck orbit y is f(x_{n+1}).
[[nodiscard]] JungckResult jungck_hybrid(const HybridPair& pair, double x0, const JungckOptions& options = {});

}  // namespace fplab
