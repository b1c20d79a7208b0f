// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fplab/closed_set.hpp"
#include "fplab/piecewise.hpp"

namespace fplab {

/// Membership slack for computed points (limits, coincidences, idempotency)
/// on interval spaces. Finite spaces are decided exactly.
inline constexpr double kPointTolerance = 1e-9;

enum class SpaceKind { finite, interval };

[[nodiscard]] const char* to_string(SpaceKind kind);

/// A single-valued f : X -> X together with a set-valued T : X -> CB(X).
class HybridPair {
 public:
  /// Checks that f and T share a domain X, that f maps X into X and that
  /// every Tx is a subset of X, on a grid of `validation_points` plus all
  /// breakpoints. Throws DomainError otherwise.
  HybridPair(PiecewiseMap f, PiecewiseSetMap t, std::size_t validation_points = 1001);

  [[nodiscard]] const PiecewiseMap& f() const noexcept { return f_; }
  [[nodiscard]] const PiecewiseSetMap& t() const noexcept { return t_; }
  [[nodiscard]] const ClosedSet& domain() const noexcept { return f_.domain(); }
  [[nodiscard]] SpaceKind kind() const noexcept { return kind_; }

  /// Breakpoints of f and T, sorted and unique.
  [[nodiscard]] std::vector<double> breakpoints() const;

 private:
  PiecewiseMap f_;
  PiecewiseSetMap t_;
  SpaceKind kind_;
};

/// Points x with fx in Tx. On finite spaces every domain point is tested
/// exactly. On interval spaces a grid of the given resolution (plus
/// breakpoints +/- 1e-9) is scanned for d(fx, Tx) <= 1e-9.
[[nodiscard]] std::vector<double> coincidence_hits(const HybridPair& pair, double resolution = 1e-3);

/// coincidence_hits merged into a set: neighbouring hits no further apart
/// than `resolution` are joined into one interval. nullopt when empty.
[[nodiscard]] std::optional<ClosedSet> coincidence_points(const HybridPair& pair, double resolution = 1e-3);

/// Points x = fx in Tx. Interval spaces add the roots of f(x) - x located by
/// bisection between grid nodes to the scanned candidates.
[[nodiscard]] std::optional<ClosedSet> common_fixed_points(const HybridPair& pair, double resolution = 1e-3);

struct IdempotencyReport {
  bool coincidentally = true;  // ffv = fv for every coincidence point v
  std::optional<double> counterexample;
  bool occasionally = false;  // ffv = fv for some coincidence point v
  std::optional<double> witness;
};

[[nodiscard]] IdempotencyReport check_idempotency(const HybridPair& pair, double resolution = 1e-3);

struct CommutingReport {
  bool commuting = true;  // fTx subset of Tfx for all x
  std::optional<double> commuting_counterexample;
  bool weakly_commuting = true;  // H(fTx, Tfx) <= d(fx, Tx) for all x
  std::optional<double> weakly_commuting_counterexample;
  bool weakly_compatible = true;  // Tfx = fTx on the coincidence points
  std::optional<double> weakly_compatible_counterexample;
};

/// Finite spaces only; throws UnsupportedError on interval spaces, where
/// fTx would require imaging intervals through f.
[[nodiscard]] CommutingReport check_commuting(const HybridPair& pair);

enum class Side { left, right, at };

[[nodiscard]] const char* to_string(Side side);

/// A sequence x_n -> x0 from `side` (constant when side == at) along which
/// f x_n -> t and T x_n -> a with t in a. `u` is set when t = fu lies in
/// the range of f.
struct LimitWitness {
  double x0 = 0.0;
  Side side = Side::at;
  double t = 0.0;
  ClosedSet a = ClosedSet::point(0.0);
  std::optional<double> u;
};

/// Image of f as a union of intervals with open/closed ends.
struct FunctionRange {
  struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
  };

  std::vector<Piece> pieces;  // merged, sorted, disjoint
  bool approximate = false;   // some piece of f was not monotone and was sampled

  /// Membership honouring open ends: a closed end admits t within `tol`
  /// outside, an open end requires t more than `tol` inside.
  [[nodiscard]] bool contains(double t, double tol = kPointTolerance) const;
  [[nodiscard]] bool closed() const;
};

/// Exact per-piece images for monotone pieces (monotonicity is checked on
/// samples); non-monotone pieces fall back to a sampled [min, max].
[[nodiscard]] FunctionRange function_range(const PiecewiseMap& f);

/// Some u with |f(u) - t| <= 1e-9, if one is found.
[[nodiscard]] std::optional<double> preimage(const PiecewiseMap& f, double t);

/// The witness realised at x0 from `side`, if the limits exist there and
/// t lies in a.
[[nodiscard]] std::optional<LimitWitness> limit_witness(const HybridPair& pair, double x0, Side side);

struct EaClrReport {
  bool ea = false;
  std::optional<LimitWitness> ea_witness;
  bool clr = false;
  std::optional<LimitWitness> clr_witness;
  bool f_range_closed = false;
  bool range_approximate = false;
};

/// Property (E.A) and the common limit range property w.r.t. f. Candidates
/// are the breakpoints (first) and a uniform grid of `grid_points` nodes,
/// each examined from the left, the right and at the point. On finite spaces
/// both properties reduce to a nonempty coincidence set.
[[nodiscard]] EaClrReport detect_ea_clr(const HybridPair& pair, std::size_t grid_points = 1001);

/// Every decidable property of the pair in one record. `commuting` is
/// nullopt on interval spaces (not decided); compatibility is never decided.
struct PairPropertyReport {
  SpaceKind kind = SpaceKind::interval;
  std::optional<ClosedSet> coincidence;
  std::optional<ClosedSet> common_fixed;
  std::optional<CommutingReport> commuting;
  IdempotencyReport idempotency;
  EaClrReport ea_clr;
};

struct PairScanOptions {
  double resolution = 1e-3;
  std::size_t limit_grid_points = 1001;
};

[[nodiscard]] PairPropertyReport analyze_pair(const HybridPair& pair, const PairScanOptions& options = {});

}  // namespace fplab
