#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles/frozen_values.hpp"
#include "singh/errors.hpp"
#include "singh/singh_engine.hpp"
#include "support/generators.hpp"

namespace {

using namespace singh;

const StructureSpec kJeffreys = StructureSpec::of(StructureKind::jeffreys);
const StructureSpec kClopper = StructureSpec::of(StructureKind::clopper_pearson);
const StructureSpec kPivot = StructureSpec::of(StructureKind::student_t_pivot);
const StructureSpec kChebyshev = StructureSpec::of(StructureKind::chebyshev_ucl);

TEST(DkwEpsilon, KnownValues) {
  EXPECT_NEAR(dkw_epsilon(10000, 0.01), 0.016276236307187292, 1e-15);
  EXPECT_NEAR(dkw_epsilon(1000, 0.01), 0.05146997846583985, 1e-15);
  EXPECT_EQ(dkw_epsilon(0, 0.01), 0.0);
  EXPECT_THROW(dkw_epsilon(10, 0.0), DomainError);
}

TEST(SinghCurve, StepFunction) {
  const auto c = SinghCurve::from_replicates({0.5, 0.2, 0.2, 0.9}, 1);
  EXPECT_EQ(c.replicates(), 5u);
  EXPECT_EQ(c.never_count(), 1u);
  EXPECT_DOUBLE_EQ(c.eval(0.0), 0.0);
  EXPECT_DOUBLE_EQ(c.eval(0.2), 0.4);
  EXPECT_DOUBLE_EQ(c.eval_below(0.2), 0.0);
  EXPECT_DOUBLE_EQ(c.eval(0.95), 0.8);
  EXPECT_DOUBLE_EQ(c.eval(1.0), 0.8);
  EXPECT_THROW(SinghCurve::from_replicates({}, 0), DomainError);
}

TEST(SinghCurve, NeverOnlyCurveIsZero) {
  const auto c = SinghCurve::from_replicates({}, 1);
  EXPECT_DOUBLE_EQ(c.eval(1.0), 0.0);
  EXPECT_DOUBLE_EQ(c.never_weight(), 1.0);
}

TEST(SinghCurve, WeightedMergesAtoms) {
  const auto c = SinghCurve::weighted({{0.3, 0.25}, {0.1, 0.25}, {0.3, 0.25}, {0.7, 0.0}}, 0.25);
  EXPECT_TRUE(c.is_exact());
  EXPECT_EQ(c.values().size(), 2u);
  EXPECT_DOUBLE_EQ(c.eval(0.3), 0.75);
  EXPECT_DOUBLE_EQ(c.eval(1.0), 0.75);
  EXPECT_DOUBLE_EQ(c.never_weight(), 0.25);
}

TEST(UniformSupDistance, ExactKolmogorovDistance) {
  // Single replicate at 0.5: the step jumps 0 -> 1 there, distance 0.5.
  EXPECT_DOUBLE_EQ(uniform_sup_distance(SinghCurve::from_replicates({0.5}, 0)), 0.5);
  EXPECT_DOUBLE_EQ(uniform_sup_distance(SinghCurve::from_replicates({0.25, 0.75}, 0)), 0.25);
}

TEST(TargetSpec, ValidationAndTheta) {
  EXPECT_THROW(TargetSpec::bernoulli(1.5).validate(), DomainError);
  EXPECT_THROW(TargetSpec::scaled_bernoulli(0.0, 2.0).validate(), DomainError);
  EXPECT_THROW(TargetSpec::normal(0.0, 0.0).validate(), DomainError);
  EXPECT_THROW(TargetSpec::gaussian_mixture({0.5, 0.4}, {0, 1}, {1, 1}).validate(), DomainError);
  EXPECT_DOUBLE_EQ(TargetSpec::gaussian_mixture({0.5, 0.5}, {4, 5}, {3, 1.5}).theta0(), 4.5);
  EXPECT_DOUBLE_EQ(TargetSpec::scaled_bernoulli(0.2, 2.0).theta0(), 2.0);
  EXPECT_DOUBLE_EQ(TargetSpec::normal(1, 2).with_grid_value(7).mu, 7.0);
  EXPECT_DOUBLE_EQ(TargetSpec::scaled_bernoulli(0.2, 2.0).with_grid_value(0.6).p, 0.6);
  EXPECT_THROW(TargetSpec::gaussian_mixture({1}, {0}, {1}).with_grid_value(1.0), DomainError);
  EXPECT_EQ(parse_family("scaled_bernoulli"), Family::scaled_bernoulli);
  EXPECT_FALSE(parse_family("poisson").has_value());
}

TEST(SinghCurveRun, RejectsMismatchedInputs) {
  const SeededStream s(1);
  EXPECT_THROW(singh_curve(kJeffreys, TargetSpec::normal(0, 1), 10, 10, s), DomainError);
  EXPECT_THROW(singh_curve(kPivot, TargetSpec::normal(0, 1), 1, 10, s), DomainError);
  EXPECT_THROW(singh_curve(kClopper, TargetSpec::bernoulli(0.4), 10, 0, s), DomainError);
}

TEST(SinghCurveRun, ResultShapeFollowsStructure) {
  const SeededStream s(2);
  EXPECT_FALSE(is_band(singh_curve(kJeffreys, TargetSpec::bernoulli(0.3), 10, 50, s)));
  EXPECT_TRUE(is_band(singh_curve(kClopper, TargetSpec::bernoulli(0.3), 10, 50, s)));
  const auto band = std::get<SinghBand>(singh_curve(kClopper, TargetSpec::bernoulli(0.3), 10, 500, s));
  for (double a = 0.0; a <= 1.0; a += 0.01) {
    // The lower components are smaller, so their curve sits on top.
    ASSERT_GE(band.lower_curve.eval(a), band.upper_curve.eval(a));
  }
}

TEST(SinghCurveRun, DeterministicAcrossWorkerCounts) {
  const SeededStream s(77);
  const auto target = TargetSpec::gaussian_mixture({0.5, 0.5}, {4, 5}, {3, 1.5}).as_predictive();
  const auto spec = StructureSpec::of(StructureKind::empirical_predictive);
  const auto one = singh_curve(spec, target, 10, 3000, s, {1});
  for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(singh_curve(spec, target, 10, 3000, s, {w}), one) << w;
  EXPECT_NE(singh_curve(spec, target, 10, 3000, SeededStream(78), {1}), one);
}

TEST(SinghCurveRun, PrefixStable) {
  // Replicate i depends only on (seed, i): the first 100 of 200 replicates
  // are the 100 of a 100-replicate run.
  const SeededStream s(5);
  const auto small = std::get<SinghCurve>(singh_curve(kPivot, TargetSpec::normal(0, 1), 5, 100, s));
  const auto big = std::get<SinghCurve>(singh_curve(kPivot, TargetSpec::normal(0, 1), 5, 200, s));
  std::size_t found = 0;
  for (double v : small.values()) {
    const auto vals = big.values();
    if (std::binary_search(vals.begin(), vals.end(), v)) ++found;
  }
  EXPECT_EQ(found, 100u);
}

TEST(SinghCurveRun, PivotIsUniform) {
  const auto c = std::get<SinghCurve>(singh_curve(kPivot, TargetSpec::normal(-2, 0.1), 4, 10000, SeededStream(3)));
  EXPECT_LE(uniform_sup_distance(c), dkw_epsilon(10000, 0.01));
  EXPECT_EQ(classify(c).classification, Classification::favourable);
}

TEST(ExactSinghCurve, MatchesOracleForJeffreys) {
  const auto r = exact_singh_curve(kJeffreys, TargetSpec::bernoulli(0.3), 10);
  const auto& c = std::get<SinghCurve>(r);
  EXPECT_NEAR(c.eval(0.1), oracle::kJeffreysTheta03Alpha100, 1e-9);
  EXPECT_NEAR(c.eval(0.25), oracle::kJeffreysTheta03Alpha250, 1e-9);
  EXPECT_NEAR(c.eval(0.5), oracle::kJeffreysTheta03Alpha500, 1e-9);
  EXPECT_NEAR(c.eval(0.75), oracle::kJeffreysTheta03Alpha750, 1e-9);
  EXPECT_NEAR(c.eval(0.9), oracle::kJeffreysTheta03Alpha900, 1e-9);
  EXPECT_NEAR(max_coverage_deficit(r), oracle::kJeffreysDeficitTheta03, 1e-9);
  EXPECT_NEAR(c.eval(1.0), 1.0, 1e-12);
}

TEST(ExactSinghCurve, ChebyshevNeverMass) {
  // All-zero samples (probability 0.8^5) leave the truth uncoverable.
  const auto r = exact_singh_curve(kChebyshev, TargetSpec::scaled_bernoulli(0.2, 2.0), 5);
  const auto& c = std::get<SinghCurve>(r);
  EXPECT_NEAR(c.never_weight(), std::pow(0.8, 5), 1e-15);
  EXPECT_NEAR(c.eval(0.95), oracle::kChebyshevP02N5At095, 1e-12);
  EXPECT_THROW(exact_singh_curve(kPivot, TargetSpec::normal(0, 1), 5), DomainError);
}

TEST(ExactSinghCurve, CboxAreasMatchOracle) {
  const auto t = TargetSpec::bernoulli(0.4);
  EXPECT_NEAR(conservatism_area(exact_singh_curve(StructureSpec::scaled(0.5), t, 20)), oracle::kCboxC05Area, 1e-9);
  EXPECT_NEAR(conservatism_area(exact_singh_curve(StructureSpec::scaled(1.0), t, 20)), oracle::kCboxC1Area, 1e-9);
  EXPECT_NEAR(conservatism_area(exact_singh_curve(StructureSpec::scaled(3.0), t, 20)), oracle::kCboxC3Area, 1e-9);
  EXPECT_NEAR(max_coverage_deficit(exact_singh_curve(StructureSpec::scaled(0.5), t, 20)),
              oracle::kCboxC05LowerDeficit, 1e-9);
}

TEST(Classify, Labels) {
  std::vector<double> uniform;
  for (int i = 1; i <= 1000; ++i) uniform.push_back((i - 0.5) / 1000.0);
  EXPECT_EQ(classify(SinghCurve::from_replicates(uniform, 0)).classification, Classification::favourable);

  std::vector<double> low(1000, 0.0);
  const auto cons = classify(SinghCurve::from_replicates(low, 0));
  EXPECT_EQ(cons.classification, Classification::conservative);
  EXPECT_TRUE(cons.valid);

  std::vector<double> high(1000, 0.99);
  const auto over = classify(SinghCurve::from_replicates(high, 0));
  EXPECT_EQ(over.classification, Classification::overconfident);
  EXPECT_FALSE(over.valid);
  EXPECT_NEAR(over.max_deficit, 0.989, 1e-12);
}

TEST(Classify, ExactCurvesUseTightSlack) {
  const auto r = exact_singh_curve(kClopper, TargetSpec::bernoulli(0.4), 10);
  const auto report = classify(r);
  EXPECT_EQ(report.dkw_epsilon, 0.0);
  EXPECT_EQ(report.m, 0u);
  EXPECT_TRUE(report.valid);
  EXPECT_NEAR(report.conservatism_area, oracle::kClopperPearsonAreaN10, 1e-9);
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
  try {
    detail::parallel_for(100, 4, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
}

TEST(EngineProperty, MonteCarloWithinDkwOfExact) {
  singh::testing::Gen gen(31);
  int misses = 0;
  const int trials = 30;
  for (int i = 0; i < trials; ++i) {
    const std::size_t n = gen.index(2, 25);
    const double p = gen.uniform(0.02, 0.98);
    const auto spec = gen.index(0, 1) == 0 ? kJeffreys : StructureSpec::scaled(gen.uniform(0.3, 3.0));
    const auto mc = singh_curve(spec, TargetSpec::bernoulli(p), n, 2000, SeededStream(gen.u64()));
    const auto ex = exact_singh_curve(spec, TargetSpec::bernoulli(p), n);
    if (grid_sup_distance(coverage_curve(mc), coverage_curve(ex)) > dkw_epsilon(2000, 0.01)) ++misses;
  }
  EXPECT_LE(misses, 1);
}

}  // namespace
