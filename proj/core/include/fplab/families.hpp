// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fplab/expr.hpp"

namespace fplab {

/// Member of the family of functions F : (0, inf) -> R that are strictly
/// increasing (F1), tend to -inf exactly at 0 (F2) and satisfy
/// beta^k F(beta) -> 0 as beta -> 0+ for some k in (0, 1) (F3).
class FFunction {
 public:
  enum class Kind { log, log_linear, neg_inv_sqrt, custom };

  /// F(t) = ln t, documented k = 1/2.
  static FFunction log();
  /// F(t) = t + ln t, documented k = 1/2.
  static FFunction log_linear();
  /// F(t) = -1/sqrt(t), documented k = 4/5 (any k in (1/2, 1) works).
  static FFunction neg_inv_sqrt();
  /// Expression in the variable `t`; axioms are only checked by sampling.
  static FFunction custom(Expr expression, double k);

  /// "log", "log-linear", "neg-inv-sqrt", or an expression in t (k = 1/2).
  static FFunction parse(std::string_view text);

  /// F(t) for t > 0. At t == 0 returns -inf, the limit forced by (F2);
  /// throws ParameterError for t < 0.
  [[nodiscard]] double operator()(double t) const;

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] std::string name() const;

 private:
  FFunction(Kind kind, double k, std::optional<Expr> expression);

  Kind kind_;
  double k_;
  std::optional<Expr> expression_;
};

/// Outcome of the sampled checks of (F1)-(F3).
struct FAxiomReport {
  std::size_t monotone_pairs = 0;
  bool monotone = true;
  std::optional<double> monotone_counterexample;  // s with F(s) >= F(t), s < t
  double f2_value = 0.0;                          // F(2^-40)
  bool f2 = false;                                // F(2^-40) < -20
  double f3_value = 0.0;                          // beta^k F(beta) at beta = 2^-40
  bool f3 = false;                                // |f3_value| < 1e-3

  [[nodiscard]] bool holds() const noexcept { return monotone && f2 && f3; }
};

/// Checks strict monotonicity on `pairs` random pairs 0 < s < t drawn
/// log-uniformly from [1e-6, 1e6], plus the (F2)/(F3) values at 2^-40.
[[nodiscard]] FAxiomReport check_axioms(const FFunction& f, std::uint64_t seed = 1, std::size_t pairs = 1000);

/// Comparison function phi : [0, inf) -> [0, inf), written in the variable t.
class PhiFunction {
 public:
  explicit PhiFunction(Expr expression);
  static PhiFunction parse(std::string_view text);

  [[nodiscard]] double operator()(double t) const { return expression_.eval(t); }
  [[nodiscard]] const Expr& expression() const noexcept { return expression_; }
  [[nodiscard]] std::string to_string() const { return expression_.to_string(); }

 private:
  Expr expression_;
};

/// Sampled checks of phi(t) < t, phi >= 0 and monotonicity. Upper
/// semicontinuity from the right is not numerically testable and is not
/// checked.
struct PhiReport {
  std::size_t samples = 0;
  bool below_identity = true;
  bool nonnegative = true;
  bool nondecreasing = true;
  std::optional<double> counterexample;

  [[nodiscard]] bool holds() const noexcept { return below_identity && nonnegative && nondecreasing; }
};

/// Log-spaced grid of `samples` points over [1e-9, 1e9].
[[nodiscard]] PhiReport check_phi(const PhiFunction& phi, std::size_t samples = 1801);

}  // namespace fplab
