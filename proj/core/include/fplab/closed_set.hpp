// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

namespace fplab {

/// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool degenerate() const noexcept { return lo == hi; }
  [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Nonempty closed bounded subset of the real line, stored as a finite union
/// of disjoint closed intervals.
///
/// The representation is canonical: pieces are sorted, and overlapping or
/// touching pieces are merged on construction, so two sets are equal exactly
/// when their piece lists are equal.
class ClosedSet {
 public:
  /// Throws std::invalid_argument for an empty list, lo > hi or a
  /// non-finite coordinate.
  explicit ClosedSet(std::vector<Interval> pieces);

  static ClosedSet point(double x);
  static ClosedSet interval(double lo, double hi);
  static ClosedSet finite(std::span<const double> points);

  [[nodiscard]] std::span<const Interval> pieces() const noexcept { return pieces_; }
  [[nodiscard]] double min() const noexcept { return pieces_.front().lo; }
  [[nodiscard]] double max() const noexcept { return pieces_.back().hi; }

  /// Exact membership.
  [[nodiscard]] bool contains(double x) const noexcept;

  /// True when every piece is a single point.
  [[nodiscard]] bool is_finite() const noexcept;
  [[nodiscard]] bool is_singleton() const noexcept;

  /// Every point of *this lies within `tol` of `other`.
  [[nodiscard]] bool subset_of(const ClosedSet& other, double tol = 0.0) const;

  [[nodiscard]] ClosedSet unite(const ClosedSet& other) const;

  /// Piece endpoints in increasing order, without duplicates.
  [[nodiscard]] std::vector<double> endpoints() const;

  /// Set-literal text, e.g. "[1, 2] | {3, 5}". Re-parses to the same set.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// d(x, A) = inf { |x - a| : a in A }, computed exactly.
[[nodiscard]] double point_set_distance(double x, const ClosedSet& set);

/// Metric projection of x onto the set. Ties go to the smaller value.
[[nodiscard]] double nearest_point(double x, const ClosedSet& set);

/// sup { d(a, B) : a in A }.
[[nodiscard]] double directed_hausdorff(const ClosedSet& a, const ClosedSet& b);

/// Hausdorff-Pompeiu distance max{ sup_a d(a,B), sup_b d(b,A) }.
[[nodiscard]] double hausdorff(const ClosedSet& a, const ClosedSet& b);

/// hausdorff(a, b) raised to p; throws ParameterError for p < 1.
[[nodiscard]] double hausdorff_pow(const ClosedSet& a, const ClosedSet& b, double p);

}  // namespace fplab
