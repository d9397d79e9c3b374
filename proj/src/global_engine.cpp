#include "singh/global_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "singh/errors.hpp"

namespace singh {
namespace {

constexpr double kNever = std::numeric_limits<double>::infinity();

// The sorted replicate column with NEVER outcomes appended as +inf.
std::vector<double> padded_column(const SinghCurve& curve) {
  std::vector<double> column(curve.values().begin(), curve.values().end());
  column.resize(curve.replicates(), kNever);
  return column;
}

}  // namespace

ParameterGrid ParameterGrid::uniform(double lo, double hi, std::size_t k, bool inclusive) {
  if (k < 1) throw DomainError("grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) throw DomainError("grid bounds must satisfy lo <= hi");
  ParameterGrid g;
  g.thetas.reserve(k);
  const double width = hi - lo;
  for (std::size_t j = 0; j < k; ++j) {
    const double jj = static_cast<double>(j);
    const double kk = static_cast<double>(k);
    if (inclusive) {
      g.thetas.push_back(k == 1 ? lo : (j + 1 == k ? hi : lo + width * jj / (kk - 1.0)));
    } else {
      g.thetas.push_back(lo + width * (jj + 0.5) / kk);
    }
  }
  return g;
}

SinghCurve combine_sorted(const std::vector<SinghCurve>& curves, bool take_max) {
  if (curves.empty()) throw DomainError("combine_sorted: no curves");
  const std::size_t m = curves.front().replicates();
  std::vector<double> combined = padded_column(curves.front());
  for (std::size_t j = 1; j < curves.size(); ++j) {
    if (curves[j].replicates() != m || m == 0) throw DomainError("combine_sorted: curves must share m");
    const auto column = padded_column(curves[j]);
    for (std::size_t i = 0; i < m; ++i) {
      combined[i] = take_max ? std::max(combined[i], column[i]) : std::min(combined[i], column[i]);
    }
  }
  const auto finite_end = std::find(combined.begin(), combined.end(), kNever);
  const auto never = static_cast<std::size_t>(combined.end() - finite_end);
  combined.erase(finite_end, combined.end());
  return SinghCurve::from_replicates(std::move(combined), never);
}

SinghResult global_singh(const StructureSpec& structure, const TargetSpec& family, const ParameterGrid& grid,
                         std::size_t n, std::size_t m, const SeededStream& stream, RunOptions options) {
  if (grid.thetas.empty()) throw DomainError("grid must not be empty");
  if (family.predictive) throw DomainError("global Singh plots need a parametric target");

  std::vector<SinghCurve> lower;
  std::vector<SinghCurve> upper;
  lower.reserve(grid.thetas.size());
  for (std::size_t j = 0; j < grid.thetas.size(); ++j) {
    const auto target = family.with_grid_value(grid.thetas[j]);
    auto local = singh_curve(structure, target, n, m, stream.substream(j), options);
    if (auto* band = std::get_if<SinghBand>(&local)) {
      lower.push_back(std::move(band->lower_curve));
      upper.push_back(std::move(band->upper_curve));
    } else {
      lower.push_back(std::move(std::get<SinghCurve>(local)));
    }
  }
  if (upper.empty()) return combine_sorted(lower, true);
  return SinghBand{combine_sorted(lower, true), combine_sorted(upper, false)};
}

}  // namespace singh
