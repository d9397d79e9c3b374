#include <gtest/gtest.h>

#include <cmath>

#include "oracles/frozen_values.hpp"
#include "singh/errors.hpp"
#include "singh/special_math.hpp"
#include "singh/structures.hpp"
#include "support/generators.hpp"

namespace {

using namespace singh;

Dataset binary(std::size_t n, std::size_t k) {
  std::vector<double> xs(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) xs[i] = 1.0;
  return Dataset(xs);
}

TEST(Dataset, SummaryStatistics) {
  const Dataset d({1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_DOUBLE_EQ(d.mean(), 2.5);
  EXPECT_DOUBLE_EQ(d.sample_sd(), std::sqrt(5.0 / 3.0));
  EXPECT_FALSE(d.is_binary());
  EXPECT_THROW(d.successes(), DomainError);
  EXPECT_EQ(binary(10, 3).successes(), 3u);
  EXPECT_THROW(Dataset({}), DomainError);
  EXPECT_THROW(Dataset({1.0, NAN}), DomainError);
}

TEST(DatasetProperty, StatisticsIgnoreSampleOrder) {
  singh::testing::Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> xs(gen.index(2, 60));
    for (double& x : xs) x = gen.index(0, 3) == 0 ? 40.0 : gen.uniform(-5, 5);
    const Dataset a(xs);
    for (std::size_t j = xs.size() - 1; j > 0; --j) std::swap(xs[j], xs[gen.index(0, j)]);
    const Dataset b(xs);
    ASSERT_EQ(a.mean(), b.mean());
    ASSERT_EQ(a.sample_sd(), b.sample_sd());
  }
}

TEST(ConfidenceValue, BetweenOrdersAndChecks) {
  EXPECT_EQ(ConfidenceValue::between(0.7, 0.2), (ConfidenceValue{0.2, 0.7}));
  EXPECT_TRUE(ConfidenceValue::precise(0.3).is_precise());
  EXPECT_THROW(ConfidenceValue::between(-0.1, 0.5), DomainError);
}

TEST(StructureKind, NamesRoundTrip) {
  for (auto k : {StructureKind::student_t_pivot, StructureKind::jeffreys, StructureKind::clopper_pearson,
                 StructureKind::scaled_cbox, StructureKind::empirical_predictive, StructureKind::chebyshev_ucl}) {
    EXPECT_EQ(parse_structure_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_structure_kind("chebyshev").has_value());
}

TEST(StructureSpec, ValidatesC) {
  EXPECT_NO_THROW(StructureSpec::scaled(0.5).validate());
  try {
    StructureSpec::scaled(-1.0).validate();
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "c must be positive");
  }
  EXPECT_TRUE(StructureSpec::of(StructureKind::jeffreys).is_precise());
  EXPECT_FALSE(StructureSpec::of(StructureKind::clopper_pearson).is_precise());
}

TEST(StudentTPivot, MatchesDirectFormula) {
  const Dataset d({3.1, 4.7, 2.2, 5.9, 4.0});
  const double t = (4.0 - d.mean()) / (d.sample_sd() / std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(student_t_pivot(4.0, d).lower, student_t_cdf(t, 4.0));
  EXPECT_DOUBLE_EQ(student_t_pivot(d.mean(), d).lower, 0.5);
  EXPECT_THROW(student_t_pivot(1.0, Dataset({2.0, 2.0, 2.0})), DegenerateDataError);
  EXPECT_THROW(student_t_pivot(1.0, Dataset({2.0})), DegenerateDataError);
}

TEST(Jeffreys, MatchesOracle) {
  EXPECT_NEAR(jeffreys(0.1, binary(10, 0)).lower, oracle::kJeffreysN10K0Theta01, 1e-13);
  EXPECT_THROW(jeffreys(1.2, binary(10, 0)), DomainError);
  EXPECT_THROW(jeffreys(0.5, Dataset({0.0, 2.0})), DomainError);
}

TEST(ClopperPearson, EdgeCounts) {
  // k = 0: lower component is a point mass at 0; k = n: upper component at 1.
  const auto none = clopper_pearson(0.3, binary(10, 0));
  EXPECT_DOUBLE_EQ(none.upper, 1.0);
  EXPECT_NEAR(none.lower, reg_inc_beta(0.3, 1, 10), 1e-15);
  const auto all = clopper_pearson(0.3, binary(10, 10));
  EXPECT_DOUBLE_EQ(all.lower, 0.0);
  EXPECT_NEAR(all.upper, reg_inc_beta(0.3, 10, 1), 1e-15);
}

TEST(StructuresProperty, ClopperPearsonEnclosesJeffreys) {
  singh::testing::Gen gen(21);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t n = gen.index(1, 300);
    const std::size_t k = gen.index(0, n);
    const double theta = gen.uniform(0.0, 1.0);
    const auto d = binary(n, k);
    const auto cp = clopper_pearson(theta, d);
    const double j = jeffreys(theta, d).lower;
    ASSERT_LE(cp.lower, j + 1e-13) << n << " " << k << " " << theta;
    ASSERT_GE(cp.upper, j - 1e-13) << n << " " << k << " " << theta;
  }
}

TEST(StructuresProperty, WiderCboxForLargerC) {
  singh::testing::Gen gen(22);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = gen.index(1, 100);
    const std::size_t k = gen.index(0, n);
    const double theta = gen.uniform(0.0, 1.0);
    const double c1 = gen.log_uniform(0.05, 20.0), c2 = c1 * gen.uniform(1.0, 4.0);
    const auto d = binary(n, k);
    const auto narrow = scaled_cbox(theta, d, c1);
    const auto wide = scaled_cbox(theta, d, c2);
    ASSERT_LE(wide.lower, narrow.lower + 1e-13);
    ASSERT_GE(wide.upper, narrow.upper - 1e-13);
  }
}

TEST(StructuresProperty, ScaledCboxAtOneIsClopperPearson) {
  singh::testing::Gen gen(23);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen.index(1, 60);
    const auto d = binary(n, gen.index(0, n));
    const double theta = gen.uniform(0.0, 1.0);
    ASSERT_EQ(scaled_cbox(theta, d, 1.0), clopper_pearson(theta, d));
  }
  EXPECT_THROW(scaled_cbox(0.4, binary(5, 2), 0.0), DomainError);
}

TEST(EmpiricalPredictive, CountsTiesOnBothSides) {
  const Dataset d({1.0, 2.0, 2.0, 5.0});
  EXPECT_EQ(empirical_predictive(2.0, d), (ConfidenceValue{0.4, 0.6}));
  EXPECT_EQ(empirical_predictive(0.0, d), (ConfidenceValue{0.0, 0.2}));
  EXPECT_EQ(empirical_predictive(9.0, d), (ConfidenceValue{0.8, 1.0}));
}

TEST(StructuresProperty, PredictiveStepsAreMultiplesOfOneOverNPlusOne) {
  singh::testing::Gen gen(24);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen.index(1, 40);
    const Dataset d(gen.reals(n, -3, 3));
    const auto v = empirical_predictive(gen.uniform(-4, 4), d);
    for (double b : {v.lower, v.upper}) {
      const double scaled = b * static_cast<double>(n + 1);
      ASSERT_NEAR(scaled, std::round(scaled), 1e-9);
    }
    ASSERT_LE(v.upper - v.lower, 1.0 / (n + 1) + 1e-12);
  }
}

TEST(Chebyshev, UclAndInverseAgree) {
  singh::testing::Gen gen(25);
  for (int i = 0; i < 1000; ++i) {
    const Dataset d(gen.reals(gen.index(2, 30), 0, 10));
    if (d.sample_sd() == 0.0) continue;
    const double alpha = gen.uniform(0.0, 0.999);
    const double ucl = chebyshev_ucl(alpha, d);
    const auto back = chebyshev_required_confidence(ucl, d);
    ASSERT_TRUE(back.has_value());
    ASSERT_NEAR(back->lower, alpha, 1e-9);
  }
}

TEST(Chebyshev, EdgeCases) {
  const Dataset flat({2.0, 2.0, 2.0});
  EXPECT_FALSE(chebyshev_required_confidence(3.0, flat).has_value());
  EXPECT_EQ(chebyshev_required_confidence(2.0, flat)->lower, 0.0);
  EXPECT_EQ(chebyshev_required_confidence(1.0, Dataset({0.0, 4.0}))->lower, 0.0);
  EXPECT_DOUBLE_EQ(chebyshev_ucl(0.0, Dataset({0.0, 4.0})), 2.0);
  EXPECT_THROW(chebyshev_ucl(1.0, Dataset({0.0, 4.0})), DomainError);
}

TEST(Evaluate, DispatchesByKind) {
  const auto d = binary(10, 4);
  EXPECT_EQ(evaluate(StructureSpec::of(StructureKind::clopper_pearson), 0.4, d), clopper_pearson(0.4, d));
  EXPECT_EQ(evaluate(StructureSpec::scaled(3.0), 0.4, d), scaled_cbox(0.4, d, 3.0));
  EXPECT_EQ(evaluate(StructureSpec::of(StructureKind::jeffreys), 0.4, d), jeffreys(0.4, d));
}

}  // namespace
