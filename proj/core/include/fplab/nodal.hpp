// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fplab {

/// Finite real values attached to the nodes of a fixed grid, with the
/// sup-norm max_i |h_i|.
class NodalFunction {
 public:
  NodalFunction() = default;
  /// Throws EvaluationError on a non-finite value.
  explicit NodalFunction(std::vector<double> values);

  static NodalFunction constant(std::size_t size, double value);

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double sup_norm() const noexcept;

  friend bool operator==(const NodalFunction&, const NodalFunction&) = default;

 private:
  std::vector<double> values_;
};

/// ||h - k||; throws std::invalid_argument when the sizes differ.
[[nodiscard]] double sup_distance(const NodalFunction& h, const NodalFunction& k);

}  // namespace fplab
