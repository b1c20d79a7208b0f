// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fplab/contraction.hpp"
#include "fplab/expr.hpp"
#include "fplab/families.hpp"
#include "fplab/nodal.hpp"

namespace fplab::volterra {

/// Values at the nodes t_j = j/n of [0, 1], j = 0..n.
using Trajectory = NodalFunction;

enum class SelectionRule { nearest_to_current, midpoint, lower_end, upper_end };

[[nodiscard]] const char* to_string(SelectionRule rule);
/// "nearest-to-current", "midpoint", "lower-end" or "upper-end".
[[nodiscard]] SelectionRule parse_rule(std::string_view text);

/// x(t) in q(t) + int_0^sigma(t) k(t,s) F(s, x(s)) ds on [0, 1].
///
/// The integral is a composite trapezoid rule on the grid. When sigma(t)
/// falls strictly inside a cell, that cell is cut at sigma(t) and the
/// integrand there uses k(t, sigma(t)) times v interpolated linearly
/// between the cell's nodes. Quadrature weights are computed once.
class Instance {
 public:
  /// q and sigma are expressions in t, the kernel in (t, s) and F a set
  /// expression in (s, x). Throws ParameterError for n == 0, a wrong arity
  /// or a negative kernel value on the grid, and DomainError when sigma
  /// leaves [0, 1].
  Instance(Expr q, Expr kernel, Expr sigma, SetExpr f, std::size_t n);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] double node(std::size_t j) const noexcept { return static_cast<double>(j) / static_cast<double>(n_); }
  [[nodiscard]] const Trajectory& q_values() const noexcept { return q_values_; }
  [[nodiscard]] const Expr& kernel() const noexcept { return kernel_; }
  [[nodiscard]] const SetExpr& f() const noexcept { return f_; }

  /// F(t_j, x).
  [[nodiscard]] ClosedSet f_at(std::size_t j, double x) const { return f_.eval({node(j), x}); }

  /// sum_i w_ji v_i approximates int_0^sigma(t_j) k(t_j, s) v(s) ds.
  [[nodiscard]] double integrate(std::size_t j, std::span<const double> v) const;

  /// max k(t_i, t_j) over grid pairs, also used for the non-negativity check.
  [[nodiscard]] double kernel_sup() const noexcept { return kernel_sup_; }

 private:
  struct Weight {
    std::size_t node;
    double weight;
  };

  Expr q_;
  Expr kernel_;
  Expr sigma_;
  SetExpr f_;
  std::size_t n_;
  Trajectory q_values_;
  std::vector<std::vector<Weight>> weights_;
  double kernel_sup_ = 0.0;
};

/// v_j in F(t_j, x_j) chosen by the rule: the point nearest x_j, the hull
/// midpoint projected back onto the set, the minimum or the maximum.
/// Throws EvaluationError if a chosen value is not a member.
[[nodiscard]] std::vector<double> select(const Instance& inst, const Trajectory& x, SelectionRule rule);

/// u_j = q(t_j) + int_0^sigma(t_j) k(t_j, s) v(s) ds with v = select(x).
[[nodiscard]] Trajectory apply_inclusion_operator(const Instance& inst, const Trajectory& x, SelectionRule rule,
                                                  std::size_t threads = 1);

struct SolveOptions {
  double tol = 1e-12;
  std::size_t max_iters = 500;
  std::size_t threads = 1;
};

struct SolveResult {
  Trajectory x;
  std::size_t iterations = 0;
  bool converged = false;
  double last_step = 0.0;
  double residual = 0.0;  // ||x* - T x*||
};

/// Successive approximation from x = q until the sup-norm step is <= tol.
[[nodiscard]] SolveResult solve_inclusion(const Instance& inst, SelectionRule rule, const SolveOptions& options = {});

/// Lower/upper solution checks with 1e-9 slack: a_j <= (T_lower a)_j using
/// the lower-end selection, b_j >= (T_upper b)_j using the upper-end one,
/// and a <= x* <= b when a solution is supplied. Failing nodes are listed.
struct BracketReport {
  bool lower = true;
  std::vector<std::size_t> lower_violations;
  bool upper = true;
  std::vector<std::size_t> upper_violations;
  std::optional<bool> ordered;
  std::vector<std::size_t> order_violations;
};

[[nodiscard]] BracketReport check_bracket(const Trajectory& a, const Trajectory& b, const Instance& inst,
                                          const std::optional<Trajectory>& solution = std::nullopt);

/// tau = -ln(max k) over grid pairs (t_i, t_j). The hypothesis on the
/// kernel needs tau > 0, i.e. max k < 1; `positive` records whether it does.
struct KernelTau {
  double sup = 0.0;
  double tau = 0.0;
  bool positive = false;
};

[[nodiscard]] KernelTau kernel_tau(const Instance& inst);

/// Nodewise
///   alpha|x-y| + beta[1+|x-Tx|]|y-Ty|/(1+|x-y|) + gamma[|x-Tx|+|y-Ty|]
///   + delta[|x-Ty|+|y-Tx|]
/// with f the identity. Throws ParameterError for invalid weights.
[[nodiscard]] Trajectory delta(const Trajectory& x, const Trajectory& y, const Trajectory& tx, const Trajectory& ty,
                               const HardyRogersWeights& weights);

/// Sampled check that F(s, .) is increasing: for x < x' both ends of
/// F(s, x) are at most those of F(s, x').
struct MonotoneReport {
  bool holds = true;
  std::size_t samples = 0;
  std::optional<std::array<double, 3>> counterexample;  // (s, x, x')
};

[[nodiscard]] MonotoneReport check_monotone(const Instance& inst, double x_lo, double x_hi, std::uint64_t seed = 1,
                                            std::size_t samples = 1000);

/// How |F(s,x(s)) - F(s,y(s))| is read for set values: the Hausdorff
/// distance of the two sets, or the distance of the selected points.
enum class H3Mode { hausdorff, selected_point };

[[nodiscard]] const char* to_string(H3Mode mode);
[[nodiscard]] H3Mode parse_h3_mode(std::string_view text);

struct H3Sampling {
  std::size_t samples = 16;  // trajectory pairs
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t seed = 1;
  std::size_t max_pieces = 8;
  H3Mode mode = H3Mode::hausdorff;
  SelectionRule rule = SelectionRule::nearest_to_current;  // builds Tx, Ty and the selected points
};

/// |F(t_j,x_j) - F(t_j,y_j)| <= e^-tau phi(Delta(x,y)_j) over random
/// piecewise-constant trajectory pairs. A violation records x = t_j and
/// y = the index of the sample pair.
[[nodiscard]] CertificateReport verify_h3(const Instance& inst, double tau, const PhiFunction& phi,
                                          const HardyRogersWeights& weights, const H3Sampling& sampling = {});

}  // namespace fplab::volterra
