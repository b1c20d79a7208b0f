// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "fplab/contraction.hpp"
#include "fplab/errors.hpp"
#include "fplab/hybrid.hpp"
#include "fplab/solvers.hpp"
#include "oracles.hpp"

namespace fplab {
namespace {

TEST(Picard, LinearContraction) {
  const auto trace = picard_multivalued(parse_multi("piecewise{ [0,1]: {x/2} }"), 1.0, {1e-10, 1000});
  EXPECT_EQ(trace.termination, Termination::converged);
  EXPECT_NEAR(trace.final_point, 0.0, 1e-9);
  EXPECT_LE(trace.residual, 1e-9);
  for (double r : step_ratios(trace)) EXPECT_NEAR(r, 0.5, 1e-12);
}

TEST(Picard, ProjectionPicksTheNearEnd) {
  const auto trace = picard_multivalued(parse_multi("piecewise{ [0,1]: [x/4, x/2] }"), 1.0);
  EXPECT_EQ(trace.termination, Termination::converged);
  ASSERT_GE(trace.iterates.size(), 2u);
  EXPECT_EQ(trace.iterates[0].y, 0.5);
  EXPECT_EQ(trace.iterates[1].y, 0.25);
  EXPECT_NEAR(trace.final_point, 0.0, 1e-9);
}

TEST(Picard, StartsOnAFixedPoint) {
  const auto trace = picard_multivalued(parse_multi("piecewise{ [0,2]: [1,2] ; (2,3]: [0,1/2] }"), 1.2);
  EXPECT_EQ(trace.termination, Termination::converged);
  EXPECT_EQ(trace.final_point, 1.2);
  EXPECT_EQ(trace.residual, 0.0);
}

TEST(Picard, Errors) {
  const PiecewiseSetMap t = parse_multi("piecewise{ [0,1]: {x/2} }");
  EXPECT_THROW((void)picard_multivalued(t, 2.0), DomainError);
  EXPECT_THROW((void)picard_multivalued(t, 0.5, {0.0, 10}), ParameterError);
  EXPECT_THROW((void)picard_multivalued(parse_multi("piecewise{ [0,1]: {x + 1/2} }"), 1.0), DomainError);
  const auto capped = picard_multivalued(t, 1.0, {1e-300, 5});
  EXPECT_EQ(capped.termination, Termination::max_iters);
  EXPECT_EQ(capped.iterates.size(), 5u);
}

TEST(Jungck, Examples) {
  const HybridPair s3(parse_single("piecewise{ [0,2]: 3 - x ; (2,3]: 3 }"),
                      parse_multi("piecewise{ [0,2]: [1,2] ; (2,3]: [0,1/2] }"));
  const auto r = jungck_hybrid(s3, 0.5);
  ASSERT_TRUE(r.coincidence.has_value());
  EXPECT_GE(*r.coincidence, 1.0);
  EXPECT_LE(*r.coincidence, 2.0);
  EXPECT_LE(point_set_distance(s3.f()(*r.coincidence), s3.t()(*r.coincidence)), 1e-3);

  const HybridPair id(identity_map(ClosedSet::interval(0, 1)), parse_multi("piecewise{ [0,1]: {x} }"));
  const auto same = jungck_hybrid(id, 0.3);
  EXPECT_EQ(same.coincidence, 0.3);
  EXPECT_EQ(same.trace.residual, 0.0);

  const HybridPair e13(parse_single("piecewise{ [1,1]: 1 ; [2,2]: 3 ; [3,3]: 2 }"),
                       parse_multi("piecewise{ [1,1]: {1} ; [2,2]: {1, 3} ; [3,3]: {1, 3} }"));
  const auto fin = jungck_hybrid(e13, 3);
  ASSERT_TRUE(fin.coincidence.has_value());
  EXPECT_TRUE(*fin.coincidence == 1.0 || *fin.coincidence == 2.0);
}

TEST(Jungck, StuckWithoutCoincidence) {
  const HybridPair none(parse_single("piecewise{ [0,1]: 1 }"), parse_multi("piecewise{ [0,1]: {0} }"));
  const auto r = jungck_hybrid(none, 0.5, {1e-10, 1000, 101, 5});
  EXPECT_FALSE(r.coincidence.has_value());
  EXPECT_EQ(r.trace.termination, Termination::stuck);
  EXPECT_LE(r.trace.iterates.size(), 6u);
}

// T(x) = [l x + c, l x + c + w] is a Nadler contraction with factor l: the
// endpoint gaps are both l |x - y|.
TEST(SolverProperty, StepRatiosRespectTheNadlerFactor) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const double l = test::dyadic(rng, 0.015625, 0.875);
    const double c = test::dyadic(rng, 0, 0.125);
    const double w = test::dyadic(rng, 0, 0.125);
    if (l * 1 + c + w > 1) continue;
    const PiecewiseSetMap t =
        parse_multi("piecewise{ [0,1]: [" + std::to_string(l) + " * x + " + std::to_string(c) + ", " +
                    std::to_string(l) + " * x + " + std::to_string(c + w) + "] }");
    const auto cert = certify(ConditionSpec::nadler(l + 1e-9), identity_map(t.domain()), t, {33, 1e-9});
    if (cert.verdict != Verdict::holds_on_samples) continue;
    const double x0 = test::dyadic(rng, 0, 1);
    const auto trace = picard_multivalued(t, x0);
    ASSERT_EQ(trace.termination, Termination::converged);
    for (double r : step_ratios(trace)) EXPECT_LE(r, l + 1e-6);
    // Residual re-checked by the clamp oracle.
    EXPECT_LE(test::clamp_distance(trace.final_point, t(trace.final_point)), 2 * 1e-10 + 1e-15);
    EXPECT_EQ(picard_multivalued(t, x0), trace);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace fplab
