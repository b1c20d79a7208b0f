// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "fplab/errors.hpp"
#include "fplab/hybrid.hpp"
#include "oracles.hpp"

namespace fplab {
namespace {

HybridPair section3() {
  return {parse_single("piecewise{ [0,2]: 3 - x ; (2,3]: 3 }"),
          parse_multi("piecewise{ [0,2]: [1,2] ; (2,3]: [0,1/2] }")};
}
HybridPair example13() {
  return {parse_single("piecewise{ [1,1]: 1 ; [2,2]: 3 ; [3,3]: 2 }"),
          parse_multi("piecewise{ [1,1]: {1} ; [2,2]: {1, 3} ; [3,3]: {1, 3} }")};
}
const char* kT14 = "piecewise{ [0,1]: [1/2,3/2] ; (1,2]: [1/4,1/2] }";
HybridPair example14f() { return {parse_single("piecewise{ [0,1): 2 - x ; [1,2]: 9/5 }"), parse_multi(kT14)}; }
HybridPair example14g() { return {parse_single("piecewise{ [0,1]: 2 - x ; (1,2]: 9/5 }"), parse_multi(kT14)}; }
HybridPair identity_pair() {
  return {identity_map(ClosedSet::interval(0, 1)), parse_multi("piecewise{ [0,1]: {x} }")};
}

TEST(HybridPair, Validation) {
  EXPECT_EQ(section3().kind(), SpaceKind::interval);
  EXPECT_EQ(example13().kind(), SpaceKind::finite);
  EXPECT_EQ(section3().breakpoints(), (std::vector<double>{0, 2, 3}));
  // f leaves X.
  EXPECT_THROW(HybridPair(parse_single("piecewise{ [0,1]: x + 1 }"), parse_multi("piecewise{ [0,1]: {0} }")),
               DomainError);
  // T leaves X.
  EXPECT_THROW(HybridPair(parse_single("piecewise{ [0,1]: x }"), parse_multi("piecewise{ [0,1]: [0, 2] }")),
               DomainError);
  // Different domains.
  EXPECT_THROW(HybridPair(parse_single("piecewise{ [0,1]: x }"), parse_multi("piecewise{ [0,2]: {0} }")),
               DomainError);
}

TEST(Coincidence, Examples) {
  EXPECT_EQ(coincidence_points(example13()), ClosedSet({{1, 1}, {2, 2}}));
  EXPECT_EQ(common_fixed_points(example13()), ClosedSet::point(1));
  EXPECT_EQ(coincidence_points(identity_pair()), ClosedSet::interval(0, 1));
  EXPECT_EQ(common_fixed_points(identity_pair()), ClosedSet::interval(0, 1));

  const auto c = coincidence_points(section3());
  ASSERT_TRUE(c.has_value());
  ASSERT_EQ(c->pieces().size(), 1u);
  EXPECT_NEAR(c->min(), 1.0, 1e-9);
  EXPECT_NEAR(c->max(), 2.0, 1e-9);
  const auto fixed = common_fixed_points(section3());
  ASSERT_TRUE(fixed.has_value());
  EXPECT_NEAR(fixed->min(), 1.5, 1e-6);
  EXPECT_NEAR(fixed->max(), 1.5, 1e-6);

  const HybridPair none(parse_single("piecewise{ [0,1]: 1 }"), parse_multi("piecewise{ [0,1]: {0} }"));
  EXPECT_FALSE(coincidence_points(none).has_value());
  EXPECT_FALSE(common_fixed_points(none).has_value());
}

TEST(Idempotency, Examples) {
  const auto e13 = check_idempotency(example13());
  EXPECT_FALSE(e13.coincidentally);
  EXPECT_EQ(e13.counterexample, 2.0);
  EXPECT_TRUE(e13.occasionally);
  EXPECT_EQ(e13.witness, 1.0);

  const auto s3 = check_idempotency(section3());
  EXPECT_FALSE(s3.coincidentally);
  ASSERT_TRUE(s3.counterexample && s3.witness);
  EXPECT_NEAR(*s3.counterexample, 1.0, 1e-9);
  EXPECT_NEAR(*s3.witness, 1.5, 1e-6);

  const auto id = check_idempotency(identity_pair());
  EXPECT_TRUE(id.coincidentally);
  EXPECT_TRUE(id.occasionally);
}

TEST(Commuting, Examples) {
  const auto e13 = check_commuting(example13());
  EXPECT_FALSE(e13.commuting);
  EXPECT_FALSE(e13.weakly_commuting);
  EXPECT_FALSE(e13.weakly_compatible);

  const HybridPair swap(parse_single("piecewise{ [0,0]: 1 ; [1,1]: 0 }"),
                        parse_multi("piecewise{ [0,0]: {0, 1} ; [1,1]: {0, 1} }"));
  EXPECT_TRUE(check_commuting(swap).commuting);

  const HybridPair id(identity_map(ClosedSet({{0, 0}, {1, 1}, {2, 2}})),
                      parse_multi("piecewise{ [0,0]: {1} ; [1,1]: {0, 2} ; [2,2]: {2} }"));
  EXPECT_TRUE(check_commuting(id).commuting);
  EXPECT_THROW((void)check_commuting(section3()), UnsupportedError);
}

TEST(Range, ExactImages) {
  const FunctionRange r = function_range(parse_single("piecewise{ [0,1): 2 - x ; [1,2]: 9/5 }"));
  EXPECT_FALSE(r.closed());
  EXPECT_FALSE(r.contains(1.0));
  EXPECT_TRUE(r.contains(1.5));
  EXPECT_TRUE(r.contains(2.0));
  EXPECT_FALSE(r.approximate);
  EXPECT_TRUE(function_range(parse_single("piecewise{ [0,1]: 2 - x ; (1,2]: 9/5 }")).closed());
  const FunctionRange wave = function_range(parse_single("piecewise{ [0,2]: (x - 1)^2 }"));
  EXPECT_TRUE(wave.approximate);
  EXPECT_TRUE(wave.contains(0.0));
  EXPECT_TRUE(wave.contains(1.0));
  ASSERT_TRUE(preimage(parse_single("piecewise{ [0,2]: 3 - x }"), 2.5).has_value());
  EXPECT_NEAR(*preimage(parse_single("piecewise{ [0,2]: 3 - x }"), 2.5), 0.5, 1e-9);
  EXPECT_FALSE(preimage(parse_single("piecewise{ [0,2]: 3 - x }"), 5).has_value());
}

TEST(EaClr, Example14) {
  const auto f = detect_ea_clr(example14f());
  EXPECT_TRUE(f.ea);
  ASSERT_TRUE(f.ea_witness.has_value());
  EXPECT_EQ(f.ea_witness->x0, 1.0);
  EXPECT_EQ(f.ea_witness->side, Side::left);
  EXPECT_EQ(f.ea_witness->t, 1.0);
  EXPECT_EQ(f.ea_witness->a, ClosedSet::interval(0.5, 1.5));
  EXPECT_FALSE(f.ea_witness->u.has_value());  // 1 is not in f(X) = (1, 2]
  EXPECT_FALSE(f.f_range_closed);

  const auto g = detect_ea_clr(example14g());
  EXPECT_TRUE(g.clr);
  ASSERT_TRUE(g.clr_witness && g.clr_witness->u);
  EXPECT_NEAR(*g.clr_witness->u, 1.0, 1e-9);
}

TEST(EaClr, WorkedExampleWitness) {
  const auto r = detect_ea_clr(section3());
  EXPECT_TRUE(r.ea);
  EXPECT_TRUE(r.clr);
  const auto w = limit_witness(section3(), 1.0, Side::right);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->t, 2.0);
  EXPECT_EQ(w->a, ClosedSet::interval(1, 2));
  ASSERT_TRUE(w->u.has_value());
  EXPECT_NEAR(*w->u, 1.0, 1e-9);
  EXPECT_FALSE(limit_witness(section3(), 0.0, Side::left).has_value());
  EXPECT_FALSE(limit_witness(section3(), 2.5, Side::at).has_value());
}

TEST(EaClr, RangeClosedAndEaImplyClrOnExamples) {
  for (const HybridPair& pair : {section3(), example13(), example14f(), example14g(), identity_pair()}) {
    const auto r = detect_ea_clr(pair);
    if (r.ea && r.f_range_closed) { EXPECT_TRUE(r.clr); }
    if (r.clr) { EXPECT_TRUE(r.ea); }
  }
}

// Random pairs on a finite space {0, ..., n-1}: every property has a direct
// set-enumeration oracle.
struct FinitePair {
  std::vector<int> f;
  std::vector<std::set<int>> t;
  HybridPair pair;
};

FinitePair random_finite_pair(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 5);
  std::vector<int> f(n);
  std::vector<std::set<int>> t(n);
  std::string ftext = "piecewise{ ", ttext = "piecewise{ ";
  for (int x = 0; x < n; ++x) {
    f[x] = static_cast<int>(rng() % n);
    const int size = 1 + static_cast<int>(rng() % n);
    while (static_cast<int>(t[x].size()) < size) t[x].insert(static_cast<int>(rng() % n));
    const std::string cond = "[" + std::to_string(x) + "," + std::to_string(x) + "]: ";
    const std::string sep = x + 1 == n ? " }" : " ; ";
    ftext += cond + std::to_string(f[x]) + sep;
    std::string lit = "{";
    for (int v : t[x]) lit += (lit.size() > 1 ? ", " : "") + std::to_string(v);
    ttext += cond + lit + "}" + sep;
  }
  return {f, t, HybridPair(parse_single(ftext), parse_multi(ttext))};
}

TEST(HybridProperty, FiniteSpacesMatchEnumeration) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 400; ++i) {
    const FinitePair p = random_finite_pair(rng);
    const int n = static_cast<int>(p.f.size());
    std::vector<double> coincidence, fixed;
    bool commuting = true, weakly_compatible = true, idempotent = true, occasionally = false;
    for (int x = 0; x < n; ++x) {
      std::set<int> ftx;
      for (int v : p.t[x]) ftx.insert(p.f[v]);
      const std::set<int>& tfx = p.t[p.f[x]];
      commuting = commuting && std::includes(tfx.begin(), tfx.end(), ftx.begin(), ftx.end());
      if (p.t[x].count(p.f[x])) {
        coincidence.push_back(x);
        if (p.f[x] == x) fixed.push_back(x);
        weakly_compatible = weakly_compatible && ftx == tfx;
        idempotent = idempotent && p.f[p.f[x]] == p.f[x];
        occasionally = occasionally || p.f[p.f[x]] == p.f[x];
      }
    }
    const auto c = coincidence_points(p.pair);
    EXPECT_EQ(c.has_value(), !coincidence.empty());
    if (c) { EXPECT_EQ(*c, ClosedSet::finite(coincidence)); }
    const auto cf = common_fixed_points(p.pair);
    EXPECT_EQ(cf.has_value(), !fixed.empty());
    if (cf) { EXPECT_EQ(*cf, ClosedSet::finite(fixed)); }

    const auto com = check_commuting(p.pair);
    EXPECT_EQ(com.commuting, commuting);
    EXPECT_EQ(com.weakly_compatible, weakly_compatible);

    const auto idem = check_idempotency(p.pair);
    EXPECT_EQ(idem.occasionally, occasionally);
    if (!coincidence.empty()) {
      EXPECT_EQ(idem.coincidentally, idempotent);
      if (idem.coincidentally) { EXPECT_TRUE(idem.occasionally); }
    }

    const auto ea = detect_ea_clr(p.pair);
    EXPECT_EQ(ea.ea, !coincidence.empty());
    EXPECT_EQ(ea.clr, !coincidence.empty());
  }
}

// Random affine pairs on [0, 1]: reported points satisfy the definitions.
TEST(HybridProperty, IntervalPairsReportGenuinePoints) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 60; ++i) {
    const double a = test::dyadic(rng, 0, 1), b = test::dyadic(rng, 0, 1);
    const double lo = test::dyadic(rng, 0, 0.5), w = test::dyadic(rng, 0, 0.5);
    const HybridPair pair(
        parse_single("piecewise{ [0,1]: " + std::to_string(a) + " + (" + std::to_string(b - a) + ") * x }"),
        parse_multi("piecewise{ [0,1/2]: [" + std::to_string(lo) + ", " + std::to_string(lo + w) +
                    "] ; (1/2,1]: {" + std::to_string(b) + "} }"));
    for (double x : coincidence_hits(pair)) {
      EXPECT_LE(test::clamp_distance(pair.f()(x), pair.t()(x)), 1e-9);
    }
    const auto fixed = common_fixed_points(pair);
    const auto coincidence = coincidence_points(pair);
    if (fixed) {
      ASSERT_TRUE(coincidence.has_value());
      for (double x : fixed->endpoints()) {
        EXPECT_LE(std::abs(pair.f()(x) - x), 1e-9);
        EXPECT_LE(point_set_distance(x, *coincidence), 1e-9);
      }
    }
    const auto r = detect_ea_clr(pair);
    if (r.clr) { EXPECT_TRUE(r.ea); }
    if (r.ea && r.f_range_closed) { EXPECT_TRUE(r.clr); }
  }
}

TEST(AnalyzePair, CommutingIsOnlyDecidedOnFiniteSpaces) {
  const auto r = analyze_pair(section3());
  EXPECT_FALSE(r.commuting.has_value());
  EXPECT_TRUE(analyze_pair(example13()).commuting.has_value());
}

}  // namespace
}  // namespace fplab
