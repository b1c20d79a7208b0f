// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fplab/closed_set.hpp"
#include "fplab/contraction.hpp"
#include "fplab/expr.hpp"
#include "fplab/families.hpp"
#include "fplab/nodal.hpp"

namespace fplab::dp {

using GridFunction = NodalFunction;

/// Two Bellman-type operators
///   (T_i h)(x) = max_{y in D grid} { g(x,y) + G_i(x, y, h(tau(x,y))) }
/// on a uniform state grid over W and decision grid over D. tau(x,y) is
/// snapped to the nearest state node (ties to the smaller node).
class Instance {
 public:
  /// g and tau are expressions in (x, y), G1 and G2 in (x, y, z). Grids are
  /// uniform_grid(w, w_points) and uniform_grid(d, d_points). Throws
  /// ParameterError on wrong arity and EvaluationError when g or tau fail to
  /// evaluate on the grid.
  Instance(ClosedSet w, std::size_t w_points, ClosedSet d, std::size_t d_points, Expr g, Expr g1, Expr g2,
           Expr tau);

  [[nodiscard]] std::span<const double> states() const noexcept { return states_; }
  [[nodiscard]] std::span<const double> decisions() const noexcept { return decisions_; }
  [[nodiscard]] const Expr& g() const noexcept { return g_; }
  /// which is 1 or 2.
  [[nodiscard]] const Expr& big_g(int which) const;
  [[nodiscard]] const Expr& tau() const noexcept { return tau_; }

  /// g(x_i, y_j) at row i * decisions().size() + j.
  [[nodiscard]] double g_at(std::size_t i, std::size_t j) const { return g_values_[i * decisions_.size() + j]; }
  /// State node nearest to tau(x_i, y_j).
  [[nodiscard]] std::size_t snap_at(std::size_t i, std::size_t j) const { return snap_[i * decisions_.size() + j]; }
  /// Largest |tau(x,y) - snapped node| over the grid.
  [[nodiscard]] double max_snap_error() const noexcept { return max_snap_error_; }
  /// max |g| over the grid.
  [[nodiscard]] double g_bound() const noexcept { return g_bound_; }

 private:
  std::vector<double> states_;
  std::vector<double> decisions_;
  Expr g_;
  Expr g1_;
  Expr g2_;
  Expr tau_;
  std::vector<double> g_values_;
  std::vector<std::size_t> snap_;
  double max_snap_error_ = 0.0;
  double g_bound_ = 0.0;
};

/// T_which h. Rows are split over `threads` workers writing disjoint slots.
[[nodiscard]] GridFunction bellman_apply(const Instance& inst, int which, const GridFunction& h,
                                         std::size_t threads = 1);

struct SolveOptions {
  double tol = 1e-9;
  std::size_t max_iters = 1000;
  std::size_t threads = 1;
};

struct SolveResult {
  GridFunction h;
  std::size_t iterations = 0;
  bool converged = false;
  double last_step = 0.0;       // ||h_k - h_{k-1}|| at the final iteration
  double residual = 0.0;        // ||T h* - h*||, one extra application
  double max_step_ratio = 0.0;  // max ||h_{k+1} - h_k|| / ||h_k - h_{k-1}||, denominators > 1e-12
  std::vector<double> steps;
};

/// h <- T_which h from h0 until the step is at most tol.
[[nodiscard]] SolveResult solve_successive(const Instance& inst, int which, const GridFunction& h0,
                                           const SolveOptions& options = {});

/// The seven distances between operator images entering Theta, in order:
/// d(T2h,T2k), d(T2h,T1h), d(T2k,T1k), [d(T1h,T2k)+d(T1k,T2h)]/2,
/// d(T1h,T2h)d(T1k,T2k)/(1+d(T2k,T2h)), d(T1h,T2k)d(T1k,T2h)/(1+d(T2k,T2h)),
/// d(T1h,T2k)d(T1k,T2h)/(1+d(T1h,T1k)).
[[nodiscard]] std::array<double, 7> theta_terms(const GridFunction& h, const GridFunction& k, const Instance& inst);

/// Maximum of theta_terms.
[[nodiscard]] double theta(const GridFunction& h, const GridFunction& k, const Instance& inst);

/// Random piecewise-constant grid functions for the sampled hypothesis check.
struct HypothesisSampling {
  std::size_t samples = 32;  // (h, k) pairs
  double lo = 0.0;           // value range of h and k
  double hi = 1.0;
  std::uint64_t seed = 1;
  std::size_t max_pieces = 8;
};

/// |G1(x,y,h(x)) - G2(x,y,k(x))| <= e^-tau phi(Theta(h,k)) for every state
/// node x and decision node y. A failing (h, k) pair contributes one
/// violation, the (x, y) with the largest gap; margins are in distance
/// space. Throws ParameterError for tau <= 0.
[[nodiscard]] CertificateReport hypothesis1_at(const Instance& inst, double tau, const PhiFunction& phi,
                                               const GridFunction& h, const GridFunction& k);

/// hypothesis1_at over `sampling.samples` random (h, k) pairs, merged in
/// sample order.
[[nodiscard]] CertificateReport verify_hypothesis1(const Instance& inst, double tau, const PhiFunction& phi,
                                                   const HypothesisSampling& sampling = {});

/// Grid-function generator used by verify_hypothesis1: a random number of
/// constant runs (1..max_pieces) with values uniform in [lo, hi].
[[nodiscard]] GridFunction random_grid_function(std::size_t size, const HypothesisSampling& sampling,
                                                std::mt19937_64& rng);

/// Checks at a computed solution: ||T1 h - T2 h|| <= tol (the two operators
/// agree) and ||T1 T1 h - T1 h|| <= tol (idempotency of T1 there).
struct PosteriorReport {
  double coincidence_gap = 0.0;
  bool coincide = false;
  double idempotency_gap = 0.0;
  bool idempotent = false;
};

[[nodiscard]] PosteriorReport check_posterior(const Instance& inst, const GridFunction& h, double tol);

/// max |G_which(x, y, z)| over the grid with z on `z_points` nodes of
/// [z_lo, z_hi]; used to report boundedness of G.
[[nodiscard]] double big_g_bound(const Instance& inst, int which, double z_lo, double z_hi,
                                 std::size_t z_points = 11);

}  // namespace fplab::dp
