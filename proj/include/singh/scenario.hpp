#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singh/global_engine.hpp"
#include "singh/singh_engine.hpp"
#include "singh/structures.hpp"

namespace singh {

enum OutputFlag : unsigned {
  kOutputCsv = 1u << 0,
  kOutputSvg = 1u << 1,
  kOutputReport = 1u << 2,
};
inline constexpr unsigned kAllOutputs = kOutputCsv | kOutputSvg | kOutputReport;

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t k = 1;
  bool inclusive = true;

  ParameterGrid grid() const { return ParameterGrid::uniform(lo, hi, k, inclusive); }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// One Singh analysis: local when `grid` is empty, global otherwise.
struct Scenario {
  std::string name = "scenario";
  StructureSpec structure;
  TargetSpec target;
  std::optional<GridSpec> grid;
  std::size_t n = 0;
  std::size_t m = 10000;
  std::uint64_t seed = 0;
  double delta = kDefaultDelta;
  unsigned outputs = kAllOutputs;

  bool is_global() const noexcept { return grid.has_value(); }
  /// Throws ValidationError naming the violated invariant.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses the line-oriented `key = value` format (`#` starts a comment).
///
/// Keys: name, structure, c, target, p, mu, sigma, weights, mus, sigmas,
/// theta0, mean, grid_lo, grid_hi, grid_k, grid_inclusive, n, m, seed, delta,
/// predict, outputs. Syntax problems (missing '=', unknown or repeated key,
/// malformed value) raise ParseError with the line number; semantic problems
/// raise ValidationError.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a scenario file. I/O failures raise std::runtime_error.
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical document for a scenario; parse_scenario(to_document(s)) == s.
std::string to_document(const Scenario& scenario);

SinghResult evaluate_scenario(const Scenario& scenario, RunOptions options = {});

struct ScenarioOutcome {
  std::string name;
  SinghResult result;
  CoverageReport report;
  std::vector<std::filesystem::path> files;
};

/// Evaluates the scenario and writes the requested artifacts into out_dir
/// (created if missing): <name>.csv, <name>.svg, <name>.report.json.
ScenarioOutcome run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir,
                             RunOptions options = {});

}  // namespace singh
