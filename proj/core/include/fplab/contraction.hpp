// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fplab/families.hpp"
#include "fplab/piecewise.hpp"
#include "fplab/sampling.hpp"

namespace fplab {

/// Non-negative weights of the rational Hardy-Rogers combination with
/// alpha + beta + 2 gamma + 2 delta <= 1.
struct HardyRogersWeights {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  /// Throws ParameterError when a weight is negative or the sum bound fails.
  void validate() const;
};

/// A contraction inequality together with its parameters.
class ConditionSpec {
 public:
  enum class Kind { nadler, wardowski, sgroi, generalized, hardy_rogers };

  /// H(Tx, Ty) <= lambda d(x, y), lambda in [0, 1).
  static ConditionSpec nadler(double lambda);
  /// tau + F(d(Tx, Ty)) <= F(d(x, y)) for singleton-valued T.
  static ConditionSpec wardowski(FFunction f, double tau);
  /// tau + F(d(y, z)) <= F(M(x, y)) for y in Tx and some z in Ty.
  static ConditionSpec sgroi(FFunction f, double tau);
  /// tau + F(H^p(Tx, Ty)) <= F(phi(generalized_max_term)).
  static ConditionSpec generalized(FFunction f, PhiFunction phi, double tau, double p);
  /// tau + F(H^p(Tx, Ty)) <= F(phi(hardy_rogers_rhs_arg)).
  static ConditionSpec hardy_rogers(FFunction f, PhiFunction phi, double tau, double p, HardyRogersWeights weights);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double tau() const noexcept { return tau_; }
  [[nodiscard]] double p() const noexcept { return p_; }
  [[nodiscard]] const HardyRogersWeights& weights() const noexcept { return weights_; }
  [[nodiscard]] const std::optional<FFunction>& f_function() const noexcept { return f_; }
  [[nodiscard]] const std::optional<PhiFunction>& phi() const noexcept { return phi_; }

 private:
  explicit ConditionSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  double lambda_ = 0.0;
  double tau_ = 0.0;
  double p_ = 1.0;
  HardyRogersWeights weights_;
  std::optional<FFunction> f_;
  std::optional<PhiFunction> phi_;
};

[[nodiscard]] const char* to_string(ConditionSpec::Kind kind);

/// The distances entering the hybrid conditions at (x, y), each raised to p.
struct PairDistances {
  double fx_tx = 0.0;  // d^p(fx, Tx)
  double fy_ty = 0.0;  // d^p(fy, Ty)
  double fx_fy = 0.0;  // d^p(fx, fy)
  double fx_ty = 0.0;  // d^p(fx, Ty)
  double fy_tx = 0.0;  // d^p(fy, Tx)
  double tx_ty = 0.0;  // H^p(Tx, Ty)
};

[[nodiscard]] PairDistances pair_distances(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t,
                                           double p);

/// Max of the seven terms of the generalized (F, phi) condition:
/// d^p(fx,Tx), d^p(fy,Ty), d^p(fy,fx), [d^p(fx,Ty) + d^p(fy,Tx)]/2,
/// d^p(fx,Tx) d^p(fy,Ty) / (1 + d^p(fy,fx)),
/// d^p(fx,Ty) d^p(fy,Tx) / (1 + d^p(fy,fx)),
/// d^p(fx,Ty) d^p(fy,Tx) / (1 + H^p(Tx,Ty)).
[[nodiscard]] double generalized_max_term(const PairDistances& d);
[[nodiscard]] double generalized_max_term(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t,
                                          double p);

/// alpha d^p(fx,fy) + beta [1 + d^p(fx,Tx)] d^p(fy,Ty) / (1 + d^p(fx,fy))
///   + gamma [d^p(fx,Tx) + d^p(fy,Ty)] + delta [d^p(fx,Ty) + d^p(fy,Tx)].
[[nodiscard]] double hardy_rogers_rhs_arg(const PairDistances& d, const HardyRogersWeights& w);
[[nodiscard]] double hardy_rogers_rhs_arg(double x, double y, const PiecewiseMap& f, const PiecewiseSetMap& t,
                                          double p, const HardyRogersWeights& w);

/// M(x, y) = max{ d(x,y), d(x,Tx), d(y,Ty), [d(x,Ty) + d(y,Tx)]/2 }.
[[nodiscard]] double sgroi_m(double x, double y, const PiecewiseSetMap& t);

struct Violation {
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;  // -inf when phi(argument) == 0 while the left side is positive
  double gap = 0.0;  // lhs - rhs > 0

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Verdict { holds_on_samples, violated };

[[nodiscard]] const char* to_string(Verdict verdict);

/// Outcome of checking an inequality on every ordered sample pair.
/// Margins are rhs - lhs of the inequality as stated: in F-space for the
/// F-conditions and in distance space for the Nadler and exponential forms.
struct CertificateReport {
  std::size_t samples = 0;  // pairs where the inequality was evaluated
  std::size_t skipped = 0;  // pairs where the left distance vanished
  std::vector<Violation> violations;
  std::optional<double> min_margin;  // over pairs that hold
  Verdict verdict = Verdict::holds_on_samples;

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

struct CertifyOptions {
  /// Worker threads for the pair scan; results are merged in grid order, so
  /// the report does not depend on this value.
  unsigned threads = 1;
};

/// Samples the condition on sample_points() of the domain of T (breakpoints
/// of f and T included). Pairs with a vanishing left-hand distance are
/// skipped. f is ignored by the nadler, wardowski and sgroi kinds.
/// Throws UnsupportedError for wardowski with a non-singleton T and
/// SampleError when no pair is evaluated.
[[nodiscard]] CertificateReport certify(const ConditionSpec& condition, const PiecewiseMap& f,
                                        const PiecewiseSetMap& t, const SampleGrid& grid,
                                        const CertifyOptions& options = {});

/// The F = ln specialisation written without logarithms:
/// H^p(Tx, Ty) <= e^{-tau} phi(argument), on the same samples as certify().
/// Only for generalized and hardy_rogers conditions whose F is log.
[[nodiscard]] CertificateReport certify_exponential_form(const ConditionSpec& condition, const PiecewiseMap& f,
                                                         const PiecewiseSetMap& t, const SampleGrid& grid,
                                                         const CertifyOptions& options = {});

/// Quantities of the Kadelburg-type contractive condition at (x, y).
struct KadelburgTerms {
  double h = 0.0;           // H(Tx, Ty)
  double fx_fy = 0.0;       // d(fx, fy)
  double half_self = 0.0;   // [d(fx,Tx) + d(fy,Ty)] / 2
  double half_cross = 0.0;  // [d(fx,Ty) + d(fy,Tx)] / 2
  double max_rhs = 0.0;     // max of the three right-hand terms
};

[[nodiscard]] KadelburgTerms kadelburg_comparison(const PiecewiseMap& f, const PiecewiseSetMap& t, double x,
                                                  double y);

}  // namespace fplab
