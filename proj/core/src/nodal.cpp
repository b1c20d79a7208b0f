// SPDX-License-Identifier: Apache-2.0
#include "fplab/nodal.hpp"

#include <cmath>
#include <stdexcept>

#include "fplab/errors.hpp"
#include "fplab/format.hpp"

namespace fplab {

NodalFunction::NodalFunction(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw EvaluationError("non-finite value " + format_real(values_[i]) + " at node " + std::to_string(i));
}

NodalFunction NodalFunction::constant(std::size_t size, double value) {
  return NodalFunction(std::vector<double>(size, value));
}

double NodalFunction::sup_norm() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const NodalFunction& h, const NodalFunction& k) {
  if (h.size() != k.size()) throw std::invalid_argument("grid functions live on different grids");
  double m = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) m = std::max(m, std::abs(h[i] - k[i]));
  return m;
}

}  // namespace fplab
