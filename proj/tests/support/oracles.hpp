// SPDX-License-Identifier: Apache-2.0
// Brute-force reference computations and random generators for tests.
// Nothing here calls the library routine it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "fplab/closed_set.hpp"

namespace fplab::test {

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Multiple of 1/64 in [lo, hi]; keeps set arithmetic exact in binary.
inline double dyadic(std::mt19937_64& rng, double lo, double hi) {
  const auto steps = static_cast<std::uint64_t>((hi - lo) * 64.0);
  return lo + static_cast<double>(rng() % (steps + 1)) / 64.0;
}

/// 1..max_pieces pieces in [-10, 10], each a point or an interval.
inline ClosedSet random_set(std::mt19937_64& rng, int max_pieces = 4) {
  const int pieces = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pieces));
  std::vector<Interval> out;
  for (int i = 0; i < pieces; ++i) {
    const double a = dyadic(rng, -10, 10);
    if (rng() % 3 == 0) {
      out.push_back({a, a});
    } else {
      const double b = dyadic(rng, -10, 10);
      out.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return ClosedSet(out);
}

inline std::vector<double> random_points(std::mt19937_64& rng, int max_points = 6) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(dyadic(rng, -10, 10));
  return out;
}

/// max over a of min over b |a - b|, then symmetrised.
inline double pairwise_hausdorff(const std::vector<double>& a, const std::vector<double>& b) {
  auto directed = [](const std::vector<double>& p, const std::vector<double>& q) {
    double worst = 0.0;
    for (double x : p) {
      double best = std::numeric_limits<double>::infinity();
      for (double y : q) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

/// Points spaced `step` apart over every piece, plus piece endpoints.
inline std::vector<double> discretize(const ClosedSet& set, double step) {
  std::vector<double> out;
  for (const Interval& piece : set.pieces()) {
    for (double x = piece.lo; x < piece.hi; x += step) out.push_back(x);
    out.push_back(piece.hi);
  }
  return out;
}

/// d(x, A) by clamping x into every piece.
inline double clamp_distance(double x, const ClosedSet& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& piece : set.pieces()) best = std::min(best, std::abs(x - std::clamp(x, piece.lo, piece.hi)));
  return best;
}

}  // namespace fplab::test
