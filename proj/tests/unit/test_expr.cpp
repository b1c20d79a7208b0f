// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "fplab/errors.hpp"
#include "fplab/expr.hpp"
#include "oracles.hpp"

namespace fplab {
namespace {

TEST(Expr, ArithmeticAndPrecedence) {
  EXPECT_EQ(parse_expr("1 + 2 * 3", {}).eval(std::span<const double>{}), 7);
  EXPECT_EQ(parse_expr("(1 + 2) * 3", {}).eval(std::span<const double>{}), 9);
  EXPECT_EQ(parse_expr("2 ^ 3 ^ 2", {}).eval(std::span<const double>{}), 512);
  EXPECT_EQ(parse_expr("-2 ^ 2", {}).eval(std::span<const double>{}), -4);
  EXPECT_EQ(parse_expr("2 ^ -1", {}).eval(std::span<const double>{}), 0.5);
  EXPECT_EQ(parse_expr("8 - 3 - 2", {}).eval(std::span<const double>{}), 3);
  EXPECT_EQ(parse_expr("8 / 4 / 2", {}).eval(std::span<const double>{}), 1);
  EXPECT_EQ(parse_expr(".5 + 1e1", {}).eval(std::span<const double>{}), 10.5);
}

TEST(Expr, VariablesAndFunctions) {
  const Expr e = parse_expr("x*x", {"x"});
  EXPECT_EQ(e.eval(0.5), 0.25);
  EXPECT_DOUBLE_EQ(parse_expr("exp(ln(x)) + sqrt(4) + abs(-x)", {"x"}).eval(3.0), 8.0);
  const Expr g = parse_expr2("x*y - 1", "x", "y");
  EXPECT_EQ(g.eval({2.0, 3.0}), 5.0);
  const Expr h = parse_expr3("z/2 + x - y", "x", "y", "z");
  EXPECT_EQ(h.eval({1.0, 2.0, 4.0}), 1.0);
  EXPECT_THROW((void)h.eval({1.0, 2.0}), EvaluationError);
}

TEST(Expr, SyntaxErrorsCarryPositions) {
  try {
    (void)parse_expr("1 + y", {"x"});
    FAIL() << "unknown identifier accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW((void)parse_expr("1 +", {"x"}), ParseError);
  EXPECT_THROW((void)parse_expr("(1", {}), ParseError);
  EXPECT_THROW((void)parse_expr("1 2", {}), ParseError);
  EXPECT_THROW((void)parse_expr("1 $ 2", {}), ParseError);
  EXPECT_THROW((void)parse_expr("", {}), ParseError);
}

TEST(SetExpr, LiteralsAndUnions) {
  const SetExpr s = parse_set_expr("{1} | [2, 2.5]", {"x"});
  EXPECT_EQ(s.eval(1.0), ClosedSet({{1, 1}, {2, 2.5}}));
  EXPECT_EQ(parse_set_expr("{x}", {"x"}).eval(0.3), ClosedSet::point(0.3));
  EXPECT_EQ(parse_set_expr("[x/4, x/2]", {"x"}).eval(1.0), ClosedSet::interval(0.25, 0.5));
  EXPECT_THROW((void)parse_set_expr("[1, 0]", {}).eval(std::span<const double>{}), EvaluationError);
  EXPECT_THROW((void)parse_set_expr("{1/x}", {"x"}).eval(0.0), EvaluationError);
  EXPECT_THROW((void)parse_set_expr("(1, 2)", {}), ParseError);
}

// Random expression text over x, built from the grammar.
std::string random_expr(std::mt19937_64& rng, int depth) {
  const auto pick = rng() % (depth <= 0 ? 3 : 10);
  switch (pick) {
    case 0: return "x";
    case 1: return std::to_string(rng() % 20);
    case 2: return std::to_string(rng() % 100) + ".25";
    case 3: return "-" + random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 5: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 6: return random_expr(rng, depth - 1) + " * " + random_expr(rng, depth - 1);
    case 7: return "(" + random_expr(rng, depth - 1) + ") / (" + random_expr(rng, depth - 1) + ")";
    case 8: return "(" + random_expr(rng, depth - 1) + ") ^ " + random_expr(rng, 0);
    default: {
      static const char* fns[] = {"exp", "ln", "sqrt", "abs"};
      return std::string(fns[rng() % 4]) + "(" + random_expr(rng, depth - 1) + ")";
    }
  }
}

TEST(ExprProperty, PrintThenParseGivesTheSameTree) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = random_expr(rng, 4);
    const Expr e = parse_expr(text, {"x"});
    const Expr back = parse_expr(e.to_string(), {"x"});
    EXPECT_EQ(back, e) << text << "  printed as  " << e.to_string();
    EXPECT_EQ(back.to_string(), e.to_string());
  }
}

TEST(ExprProperty, PrintingKeepsValues) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 500; ++i) {
    const Expr e = parse_expr(random_expr(rng, 3), {"x"});
    const double x = test::unit(rng) * 4;
    const double a = e.eval(x);
    const double b = parse_expr(e.to_string(), {"x"}).eval(x);
    if (std::isnan(a)) {
      EXPECT_TRUE(std::isnan(b));
    } else {
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Expr, MinimalParentheses) {
  EXPECT_EQ(parse_expr("(3 - x)", {"x"}).to_string(), "3 - x");
  EXPECT_EQ(parse_expr("3 - (x - 1)", {"x"}).to_string(), "3 - (x - 1)");
  EXPECT_EQ(parse_expr("(x ^ 2) ^ 3", {"x"}).to_string(), "(x^2)^3");
  EXPECT_EQ(parse_expr("x ^ (2 ^ 3)", {"x"}).to_string(), "x^2^3");
  EXPECT_EQ(parse_expr("(-x) ^ 2", {"x"}).to_string(), "(-x)^2");
}

}  // namespace
}  // namespace fplab
