// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fplab/dp.hpp"
#include "fplab/errors.hpp"
#include "oracles.hpp"

namespace fplab::dp {
namespace {

Instance make(const std::string& g, const std::string& g1, const std::string& g2, const std::string& tau,
              std::size_t points = 21) {
  const ClosedSet unit = ClosedSet::interval(0, 1);
  return {unit,
          points,
          unit,
          points,
          parse_expr2(g, "x", "y"),
          parse_expr3(g1, "x", "y", "z"),
          parse_expr3(g2, "x", "y", "z"),
          parse_expr2(tau, "x", "y")};
}

// Brute-force operator: evaluates g and G directly and snaps by linear search.
GridFunction oracle_apply(const Instance& inst, int which, const GridFunction& h) {
  const auto xs = inst.states();
  const auto ys = inst.decisions();
  std::vector<double> out;
  for (double x : xs) {
    double best = -std::numeric_limits<double>::infinity();
    for (double y : ys) {
      const double target = inst.tau().eval({x, y});
      std::size_t node = 0;
      for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs(xs[i] - target) < std::abs(xs[node] - target)) node = i;
      }
      best = std::max(best, inst.g().eval({x, y}) + inst.big_g(which).eval({x, y, h[node]}));
    }
    out.push_back(best);
  }
  return GridFunction(out);
}

GridFunction nodal_from(const Instance& inst, double (*fn)(double)) {
  std::vector<double> v;
  for (double x : inst.states()) v.push_back(fn(x));
  return GridFunction(v);
}

TEST(Bellman, Examples) {
  const Instance zero_g = make("x*(1-y)", "0", "0", "x*y");
  const GridFunction a = bellman_apply(zero_g, 1, GridFunction::constant(21, 5));
  const GridFunction b = bellman_apply(zero_g, 1, GridFunction::constant(21, -3));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, nodal_from(zero_g, [](double x) { return x; }));

  const Instance half = make("0", "z/2", "z/2", "x*y");
  EXPECT_EQ(bellman_apply(half, 1, GridFunction::constant(21, 1)), GridFunction::constant(21, 0.5));

  const Instance demo = make("x*y", "z/2", "z/2", "x*y");
  EXPECT_EQ(bellman_apply(demo, 2, GridFunction::constant(21, 0)), nodal_from(demo, [](double x) { return x; }));
  EXPECT_LE(demo.max_snap_error(), 0.025 + 1e-15);
  EXPECT_EQ(bellman_apply(demo, 1, GridFunction::constant(21, 1)), oracle_apply(demo, 1, GridFunction::constant(21, 1)));
}

TEST(Bellman, Errors) {
  const ClosedSet unit = ClosedSet::interval(0, 1);
  EXPECT_THROW(Instance(unit, 5, unit, 5, parse_expr("x", {"x"}), parse_expr3("z", "x", "y", "z"),
                        parse_expr3("z", "x", "y", "z"), parse_expr2("x", "x", "y")),
               ParameterError);
  EXPECT_THROW(Instance(unit, 5, unit, 5, parse_expr2("1/(x-y)", "x", "y"), parse_expr3("z", "x", "y", "z"),
                        parse_expr3("z", "x", "y", "z"), parse_expr2("x", "x", "y")),
               EvaluationError);
  const Instance demo = make("x*y", "z/2", "z/2", "x*y");
  EXPECT_THROW((void)bellman_apply(demo, 3, GridFunction::constant(21, 0)), ParameterError);
}

TEST(Solve, ContractsToZero) {
  const Instance inst = make("0", "z/2", "z/2", "x*y");
  const SolveResult r = solve_successive(inst, 1, GridFunction::constant(21, 7), {1e-9, 200, 1});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.h.sup_norm(), 1e-8);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NEAR(r.max_step_ratio, 0.5, 1e-12);
}

TEST(Solve, ClosedFormFixedPoint) {
  const Instance inst = make("x*y", "z/2", "z/2", "x*y", 201);
  const SolveResult r = solve_successive(inst, 1, GridFunction::constant(201, 0), {1e-9, 200, 1});
  ASSERT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 60u);
  EXPECT_LE(sup_distance(r.h, nodal_from(inst, [](double x) { return 2 * x; })), 5e-3);
  EXPECT_LE(r.max_step_ratio, 0.5 + 1e-6);
  // Residual re-verified with the brute-force operator.
  EXPECT_NEAR(sup_distance(oracle_apply(inst, 1, r.h), r.h), r.residual, 1e-15);
  const PosteriorReport post = check_posterior(inst, r.h, 1e-8);
  EXPECT_TRUE(post.coincide);
  EXPECT_TRUE(post.idempotent);
}

TEST(Solve, ZeroCouplingConvergesInOneStep) {
  const Instance inst = make("x*(1-y)", "0", "0", "x*y");
  const SolveResult r = solve_successive(inst, 2, GridFunction::constant(21, 3), {1e-9, 50, 1});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2u);
  EXPECT_EQ(r.h, bellman_apply(inst, 2, GridFunction::constant(21, 0)));
}

TEST(Theta, Terms) {
  const Instance inst = make("0", "z/2", "z/2", "x*y");
  const GridFunction h = GridFunction::constant(21, 1), k = GridFunction::constant(21, 0);
  EXPECT_EQ(theta(h, h, inst), 0.0);
  // T1 = T2 here: T h = 1/2, T k = 0.
  const auto t = theta_terms(h, k, inst);
  const std::array<double, 7> expected{0.5, 0, 0, 0.5, 0, 0.25 / 1.5, 0.25 / 1.5};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_DOUBLE_EQ(t[i], expected[i]) << i;
  EXPECT_EQ(theta(h, k, inst), 0.5);
}

TEST(Hypothesis1, Examples) {
  const PhiFunction phi = PhiFunction::parse("9/10*t");
  // G1 = G2 makes the left side vanish only when G ignores z or h = k.
  const Instance flat = make("x*y", "x*y", "x*y", "x*y");
  EXPECT_EQ(verify_hypothesis1(flat, 1.0, phi).verdict, Verdict::holds_on_samples);
  const Instance same = make("x*y", "z/2", "z/2", "x*y");
  std::mt19937_64 rng(3);
  const GridFunction h = random_grid_function(21, {}, rng);
  EXPECT_TRUE(hypothesis1_at(same, 1.0, phi, h, h).violations.empty());

  const Instance apart = make("x*y", "z", "0", "x*y");
  const GridFunction one = GridFunction::constant(21, 1);
  const auto r = hypothesis1_at(apart, 5, phi, one, one);
  ASSERT_EQ(r.violations.size(), 1u);
  // Oracle: lhs |1 - 0| = 1; Theta from operator images by brute force.
  const GridFunction t1 = oracle_apply(apart, 1, one), t2 = oracle_apply(apart, 2, one);
  const double d12 = sup_distance(t1, t2);
  const double th = std::max({0.0, d12, d12, d12, d12 * d12, d12 * d12, d12 * d12});
  EXPECT_EQ(r.violations[0].lhs, 1.0);
  EXPECT_NEAR(r.violations[0].rhs, std::exp(-5.0) * 0.9 * th, 1e-15);
  EXPECT_THROW((void)verify_hypothesis1(apart, 0, phi), ParameterError);
}

TEST(Hypothesis1, SampledReportMatchesBruteForce) {
  const Instance inst = make("x*y", "z/2", "z/3", "x*y");
  const PhiFunction phi = PhiFunction::parse("9/10*t");
  const HypothesisSampling sampling{12, 0, 1, 9, 8};
  const auto report = verify_hypothesis1(inst, std::log(2.0), phi, sampling);
  std::mt19937_64 rng(sampling.seed);
  std::size_t violated_pairs = 0;
  for (std::size_t s = 0; s < sampling.samples; ++s) {
    const GridFunction h = random_grid_function(21, sampling, rng);
    const GridFunction k = random_grid_function(21, sampling, rng);
    const double rhs = 0.5 * 0.9 * theta(h, k, inst);
    double worst = 0.0;
    for (std::size_t i = 0; i < 21; ++i) worst = std::max(worst, std::abs(h[i] / 2 - k[i] / 3));
    if (worst > rhs) ++violated_pairs;
  }
  EXPECT_EQ(report.violations.size(), violated_pairs);
  EXPECT_EQ(report, verify_hypothesis1(inst, std::log(2.0), phi, sampling));
}

TEST(DpProperty, OperatorMatchesBruteForce) {
  std::mt19937_64 rng(51);
  const Instance inst = make("x*y - y*y", "z/2 + x", "(z + y)/3", "(x + y)/2");
  const HypothesisSampling sampling{};
  for (int i = 0; i < 50; ++i) {
    const GridFunction h = random_grid_function(21, sampling, rng);
    for (int which : {1, 2}) EXPECT_EQ(bellman_apply(inst, which, h), oracle_apply(inst, which, h));
  }
}

TEST(DpProperty, LipschitzInZGivesAContraction) {
  std::mt19937_64 rng(52);
  const Instance inst = make("x*y", "z/2", "(z + x)/3", "x*y");
  HypothesisSampling sampling{};
  sampling.lo = -5;
  sampling.hi = 5;
  for (int i = 0; i < 100; ++i) {
    const GridFunction h = random_grid_function(21, sampling, rng);
    const GridFunction k = random_grid_function(21, sampling, rng);
    EXPECT_LE(sup_distance(bellman_apply(inst, 1, h), bellman_apply(inst, 1, k)), 0.5 * sup_distance(h, k) + 1e-9);
    EXPECT_LE(sup_distance(bellman_apply(inst, 2, h), bellman_apply(inst, 2, k)),
              sup_distance(h, k) / 3 + 1e-9);
  }
}

TEST(DpProperty, ZeroCouplingIsIdempotentAndThreadsDoNotMatter) {
  std::mt19937_64 rng(53);
  const Instance flat = make("x*(1-y)", "0", "0", "x*y");
  const Instance demo = make("x*y", "z/2", "z/2", "x*y");
  for (int i = 0; i < 20; ++i) {
    const GridFunction h = random_grid_function(21, {}, rng);
    const GridFunction th = bellman_apply(flat, 1, h);
    EXPECT_EQ(bellman_apply(flat, 1, th), th);
    EXPECT_EQ(bellman_apply(demo, 1, h, 1), bellman_apply(demo, 1, h, 4));
    EXPECT_EQ(theta(h, h, demo), 0.0);
  }
}

}  // namespace
}  // namespace fplab::dp
