#include <gtest/gtest.h>

#include <cmath>

#include "singh/errors.hpp"
#include "singh/global_engine.hpp"

namespace {

using namespace singh;

TEST(ParameterGrid, InclusiveAndMidpoint) {
  const auto inc = ParameterGrid::uniform(0.0, 1.0, 5, true);
  EXPECT_EQ(inc.thetas, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  const auto mid = ParameterGrid::uniform(0.0, 1.0, 4, false);
  EXPECT_EQ(mid.thetas, (std::vector<double>{0.125, 0.375, 0.625, 0.875}));
  EXPECT_EQ(ParameterGrid::uniform(0.3, 0.9, 1, true).thetas, std::vector<double>{0.3});
  EXPECT_EQ(ParameterGrid::uniform(0.0, 1.0, 100, false).thetas.size(), 100u);
  EXPECT_THROW(ParameterGrid::uniform(1.0, 0.0, 3), DomainError);
  EXPECT_THROW(ParameterGrid::uniform(0.0, 1.0, 0), DomainError);
}

TEST(CombineSorted, IndexWiseExtremesWithNever) {
  const auto a = SinghCurve::from_replicates({0.1, 0.5, 0.9}, 0);
  const auto b = SinghCurve::from_replicates({0.2, 0.3}, 1);
  const auto hi = combine_sorted({a, b}, true);
  EXPECT_EQ(std::vector<double>(hi.values().begin(), hi.values().end()), (std::vector<double>{0.2, 0.5}));
  EXPECT_EQ(hi.never_count(), 1u);
  const auto lo = combine_sorted({a, b}, false);
  EXPECT_EQ(std::vector<double>(lo.values().begin(), lo.values().end()), (std::vector<double>{0.1, 0.3, 0.9}));
  EXPECT_EQ(lo.never_count(), 0u);
  EXPECT_THROW(combine_sorted({a, SinghCurve::from_replicates({0.1}, 0)}, true), DomainError);
}

TEST(GlobalSingh, SinglePointGridIsLocalRun) {
  const SeededStream s(12);
  const auto spec = StructureSpec::of(StructureKind::clopper_pearson);
  const auto local = singh_curve(spec, TargetSpec::bernoulli(0.35), 10, 500, s.substream(0));
  const auto global = global_singh(spec, TargetSpec::bernoulli(0.9), ParameterGrid{{0.35}}, 10, 500, s);
  EXPECT_EQ(global, local);
}

TEST(GlobalSingh, PreciseCurveBoundsEveryLocalCurveFromBelow) {
  const SeededStream s(13);
  const auto spec = StructureSpec::of(StructureKind::student_t_pivot);
  const auto grid = ParameterGrid::uniform(-2.0, 2.0, 5);
  const auto global = std::get<SinghCurve>(global_singh(spec, TargetSpec::normal(0, 1), grid, 6, 400, s));
  for (std::size_t j = 0; j < grid.thetas.size(); ++j) {
    const auto local =
        std::get<SinghCurve>(singh_curve(spec, TargetSpec::normal(grid.thetas[j], 1), 6, 400, s.substream(j)));
    for (int i = 0; i <= 100; ++i) ASSERT_LE(global.eval(i / 100.0), local.eval(i / 100.0));
  }
}

TEST(GlobalSingh, JeffreysEnvelopeDipsBelowDiagonal) {
  const auto spec = StructureSpec::of(StructureKind::jeffreys);
  const auto grid = ParameterGrid::uniform(0.0, 1.0, 20, false);
  const auto r = global_singh(spec, TargetSpec::bernoulli(0.5), grid, 10, 1000, SeededStream(14));
  const auto report = classify(r);
  EXPECT_EQ(report.classification, Classification::overconfident);
  EXPECT_GT(report.max_deficit, 0.1);
}

TEST(GlobalSingh, DeterministicAcrossWorkers) {
  const auto spec = StructureSpec::of(StructureKind::clopper_pearson);
  const auto grid = ParameterGrid::uniform(0.0, 1.0, 7, false);
  const auto a = global_singh(spec, TargetSpec::bernoulli(0.5), grid, 8, 300, SeededStream(15), {1});
  const auto b = global_singh(spec, TargetSpec::bernoulli(0.5), grid, 8, 300, SeededStream(15), {4});
  EXPECT_EQ(a, b);
}

TEST(GlobalSingh, RejectsPredictiveAndMixtures) {
  const auto spec = StructureSpec::of(StructureKind::empirical_predictive);
  const auto t = TargetSpec::normal(0, 1).as_predictive();
  EXPECT_THROW(global_singh(spec, t, ParameterGrid{{0.0}}, 5, 10, SeededStream(1)), DomainError);
  EXPECT_THROW(global_singh(StructureSpec::of(StructureKind::student_t_pivot),
                            TargetSpec::gaussian_mixture({1}, {0}, {1}), ParameterGrid{{0.0}}, 5, 10, SeededStream(1)),
               DomainError);
  EXPECT_THROW(global_singh(spec, TargetSpec::normal(0, 1), ParameterGrid{}, 5, 10, SeededStream(1)), DomainError);
}

}  // namespace
