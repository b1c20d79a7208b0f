// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fplab/closed_set.hpp"

namespace fplab {

/// Sample layout for certification and scans: a uniform grid over the hull
/// of the domain plus every breakpoint and breakpoint +/- offset.
struct SampleGrid {
  std::size_t points = 201;
  double breakpoint_offset = 1e-9;
};

/// `points` equally spaced nodes lo + (hi - lo) * i / (points - 1) over the
/// hull, kept only where they lie in the domain, plus all piece endpoints of
/// the domain. Sorted and unique.
[[nodiscard]] std::vector<double> uniform_grid(const ClosedSet& domain, std::size_t points);

/// uniform_grid plus breakpoints and breakpoint +/- offset that lie in the
/// domain. Sorted and unique.
[[nodiscard]] std::vector<double> sample_points(const ClosedSet& domain, std::span<const double> breakpoints,
                                                const SampleGrid& grid);

}  // namespace fplab
