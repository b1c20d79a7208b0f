// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fplab::detail {

// std::mt19937_64 output is fully specified, unlike the standard
// distributions, so sampled reports are reproducible across toolchains.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// 1..max_pieces constant runs over `size` nodes with values uniform in [lo, hi].
inline std::vector<double> piecewise_constant(std::mt19937_64& rng, std::size_t size, double lo, double hi,
                                              std::size_t max_pieces) {
  const std::size_t pieces = 1 + below(rng, std::max<std::size_t>(max_pieces, 1));
  std::vector<std::size_t> cuts{0, size};
  for (std::size_t c = 1; c < pieces; ++c) cuts.push_back(below(rng, size + 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> values(size);
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double v = uniform(rng, lo, hi);
    for (std::size_t i = cuts[c]; i < cuts[c + 1]; ++i) values[i] = v;
  }
  return values;
}

}  // namespace fplab::detail
