// SPDX-License-Identifier: Apache-2.0
#include "fplab/sampling.hpp"

#include <algorithm>

#include "fplab/errors.hpp"

namespace fplab {

namespace {

void sort_unique(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

std::vector<double> uniform_grid(const ClosedSet& domain, std::size_t points) {
  if (points < 2) throw ParameterError("sample grid needs at least 2 points");
  std::vector<double> out = domain.endpoints();
  const double lo = domain.min();
  const double hi = domain.max();
  const double n = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    double x = (i + 1 == points) ? hi : lo + (hi - lo) * static_cast<double>(i) / n;
    if (domain.contains(x)) out.push_back(x);
  }
  sort_unique(out);
  return out;
}

std::vector<double> sample_points(const ClosedSet& domain, std::span<const double> breakpoints,
                                  const SampleGrid& grid) {
  std::vector<double> out = uniform_grid(domain, grid.points);
  for (double b : breakpoints) {
    for (double x : {b - grid.breakpoint_offset, b, b + grid.breakpoint_offset}) {
      if (domain.contains(x)) out.push_back(x);
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace fplab
