// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "fplab/closed_set.hpp"
#include "fplab/errors.hpp"
#include "fplab/expr.hpp"
#include "oracles.hpp"

namespace fplab {
namespace {

TEST(ClosedSet, MergesOverlappingAndTouchingPieces) {
  const ClosedSet s({{3, 4}, {0, 1}, {1, 2}, {3.5, 5}});
  ASSERT_EQ(s.pieces().size(), 2u);
  EXPECT_EQ(s.pieces()[0], (Interval{0, 2}));
  EXPECT_EQ(s.pieces()[1], (Interval{3, 5}));
  EXPECT_EQ(s, ClosedSet({{0, 2}, {3, 5}}));
}

TEST(ClosedSet, RejectsMalformedInput) {
  EXPECT_THROW(ClosedSet({}), std::invalid_argument);
  EXPECT_THROW(ClosedSet({{2, 1}}), std::invalid_argument);
  EXPECT_THROW(ClosedSet({{0, std::numeric_limits<double>::infinity()}}), std::invalid_argument);
  EXPECT_THROW(ClosedSet({{std::nan(""), 1}}), std::invalid_argument);
}

TEST(ClosedSet, MembershipAndShape) {
  const double pts[] = {3, 1, 3};
  const ClosedSet finite = ClosedSet::finite(pts);
  EXPECT_TRUE(finite.is_finite());
  EXPECT_FALSE(finite.is_singleton());
  EXPECT_EQ(finite.endpoints(), (std::vector<double>{1, 3}));
  EXPECT_TRUE(finite.contains(3));
  EXPECT_FALSE(finite.contains(2));
  EXPECT_TRUE(ClosedSet::point(2).is_singleton());
  EXPECT_FALSE(ClosedSet::interval(0, 1).is_finite());
  EXPECT_EQ(finite.min(), 1);
  EXPECT_EQ(finite.max(), 3);
}

TEST(ClosedSet, SubsetWithTolerance) {
  const ClosedSet big({{0, 2}, {3, 4}});
  EXPECT_TRUE(ClosedSet::interval(0.5, 1).subset_of(big));
  EXPECT_FALSE(ClosedSet::interval(1, 3).subset_of(big));
  EXPECT_FALSE(ClosedSet::point(2.0 + 1e-10).subset_of(big));
  EXPECT_TRUE(ClosedSet::point(2.0 + 1e-10).subset_of(big, 1e-9));
}

TEST(ClosedSet, TextRoundTrip) {
  const ClosedSet s({{1, 2}, {3, 3}, {5, 5}});
  EXPECT_EQ(s.to_string(), "[1, 2] | {3, 5}");
  EXPECT_EQ(parse_set_expr(s.to_string(), {}).eval(std::span<const double>{}), s);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const ClosedSet r = test::random_set(rng);
    EXPECT_EQ(parse_set_expr(r.to_string(), {}).eval(std::span<const double>{}), r) << r.to_string();
  }
}

TEST(PointSetDistance, Examples) {
  EXPECT_EQ(point_set_distance(3, ClosedSet::interval(0, 0.5)), 2.5);
  EXPECT_EQ(point_set_distance(1.5, ClosedSet::interval(1, 2)), 0.0);
  const ClosedSet two({{1, 2}, {3, 4}});
  EXPECT_EQ(point_set_distance(0.5, two), 0.5);
  double brute = std::numeric_limits<double>::infinity();
  for (double a : test::discretize(two, 1e-6 * 2)) brute = std::min(brute, std::abs(0.5 - a));
  EXPECT_NEAR(point_set_distance(0.5, two), brute, 1e-12);
}

TEST(PointSetDistance, AgreesWithClampOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const ClosedSet s = test::random_set(rng);
    const double x = test::dyadic(rng, -12, 12);
    EXPECT_EQ(point_set_distance(x, s), test::clamp_distance(x, s));
  }
}

TEST(NearestPoint, TiesGoToTheSmallerValue) {
  const ClosedSet s({{0, 1}, {3, 4}});
  EXPECT_EQ(nearest_point(2, s), 1);
  EXPECT_EQ(nearest_point(2.5, s), 3);
  EXPECT_EQ(nearest_point(0.25, s), 0.25);
  EXPECT_EQ(nearest_point(-5, s), 0);
  EXPECT_EQ(nearest_point(9, s), 4);
}

TEST(Hausdorff, Examples) {
  EXPECT_EQ(hausdorff(ClosedSet::interval(1, 2), ClosedSet::interval(0, 0.5)), 1.5);
  EXPECT_EQ(directed_hausdorff(ClosedSet::interval(0, 0.5), ClosedSet::interval(1, 2)), 1.0);
  const ClosedSet a({{0, 3}, {7, 9}});
  EXPECT_EQ(hausdorff(a, a), 0.0);
  const double one_five[] = {1, 5};
  EXPECT_EQ(hausdorff(ClosedSet::point(0), ClosedSet::finite(one_five)), 5.0);
  EXPECT_EQ(test::pairwise_hausdorff({0}, {1, 5}), 5.0);
}

TEST(Hausdorff, GapMidpointsAreCandidates) {
  // Every point of [0,10] is within 1 of {0,2,...,10}, attained halfway
  // between the points.
  const double evens[] = {0, 2, 4, 6, 8, 10};
  EXPECT_EQ(hausdorff(ClosedSet::interval(0, 10), ClosedSet::finite(evens)), 1.0);
}

TEST(HausdorffPow, Examples) {
  EXPECT_EQ(hausdorff_pow(ClosedSet::interval(1, 2), ClosedSet::interval(0, 0.5), 2), 2.25);
  EXPECT_EQ(hausdorff_pow(ClosedSet::point(0), ClosedSet::point(2), 3), 8.0);
  const ClosedSet a({{0, 1}, {4, 4}});
  const ClosedSet b = ClosedSet::interval(2, 3);
  EXPECT_EQ(hausdorff_pow(a, b, 1), hausdorff(a, b));
  EXPECT_THROW((void)hausdorff_pow(a, b, 0.5), ParameterError);
}

TEST(HausdorffProperty, SymmetryIdentityTriangle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const ClosedSet a = test::random_set(rng);
    const ClosedSet b = test::random_set(rng);
    const ClosedSet c = test::random_set(rng);
    EXPECT_EQ(hausdorff(a, b), hausdorff(b, a));
    EXPECT_EQ(hausdorff(a, b) == 0.0, a == b);
    EXPECT_EQ(hausdorff(a, a), 0.0);
    EXPECT_LE(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c) + 1e-12);
  }
}

TEST(HausdorffProperty, SingletonsReduceToAbsoluteDifference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const double a = test::unit(rng) * 20 - 10;
    const double b = test::unit(rng) * 20 - 10;
    EXPECT_EQ(hausdorff(ClosedSet::point(a), ClosedSet::point(b)), std::abs(a - b));
  }
}

TEST(HausdorffProperty, FiniteSetsMatchPairwiseEnumeration) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto pa = test::random_points(rng);
    const auto pb = test::random_points(rng);
    EXPECT_EQ(hausdorff(ClosedSet::finite(pa), ClosedSet::finite(pb)), test::pairwise_hausdorff(pa, pb));
  }
}

TEST(HausdorffProperty, IntervalUnionsMatchDenseDiscretization) {
  std::mt19937_64 rng(3);
  constexpr double step = 1.0 / 256;
  for (int i = 0; i < 100; ++i) {
    const ClosedSet a = test::random_set(rng, 3);
    const ClosedSet b = test::random_set(rng, 3);
    // Dyadic data keeps the sup on the dense grid, so equality is exact.
    EXPECT_EQ(hausdorff(a, b), test::pairwise_hausdorff(test::discretize(a, step), test::discretize(b, step)));
  }
}

}  // namespace
}  // namespace fplab
