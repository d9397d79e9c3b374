#pragma once

#include <cstddef>
#include <vector>

#include "singh/singh_engine.hpp"

namespace singh {

/// Parameter values swept by a global Singh plot.
struct ParameterGrid {
  std::vector<double> thetas;

  /// k values over [lo, hi]. Inclusive grids place the first and last point on
  /// the endpoints; exclusive grids use the midpoints of k equal cells.
  static ParameterGrid uniform(double lo, double hi, std::size_t k, bool inclusive = true);
};

/// Global Singh plot over a parameter grid.
///
/// Grid point j runs a local Singh plot on family.with_grid_value(theta_j)
/// using stream.substream(j); the sorted required-confidence columns are then
/// combined index by index. Worst-case coverage is kept on each side: precise
/// curves and band lower curves take the per-index maximum, band upper curves
/// the per-index minimum. NEVER entries rank above every finite value.
SinghResult global_singh(const StructureSpec& structure, const TargetSpec& family, const ParameterGrid& grid,
                         std::size_t n, std::size_t m, const SeededStream& stream, RunOptions options = {});

/// Index-wise combination of equally sized Monte Carlo curves, exposed for
/// testing. take_max selects the per-index maximum, otherwise the minimum.
SinghCurve combine_sorted(const std::vector<SinghCurve>& curves, bool take_max);

}  // namespace singh
