#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "singh/singh_engine.hpp"

namespace singh {

struct Scenario;

/// CSV of the step curve: `alpha,coverage` or `alpha,coverage_lower,coverage_upper`,
/// rows at alpha = 0, at every stored value, and at alpha = 1, then a
/// `# never=...` comment. Alphas are printed rounded up to 9 significant
/// digits and coverages are evaluated at the printed alpha.
std::string format_csv(const SinghResult& result);
void emit_csv(const SinghResult& result, const std::filesystem::path& path);

struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string never;
};

/// Splits a document produced by format_csv. Throws ParseError on malformed input.
CsvDocument parse_csv(std::string_view text);

/// Formats a probability the way the CSV coverage columns do (9 significant digits).
std::string format_probability(double value);

enum class LineStyle { solid, dashed, dash_dot, dotted };

/// Standalone SVG 1.1 plot: the curve (or the band's two curves: solid upper,
/// dashed lower) against the dotted diagonal, axes on [0, 1]^2.
std::string render_svg(const SinghResult& result, std::string_view title);
void emit_svg(const SinghResult& result, const CoverageReport& report, std::string_view name,
              const std::filesystem::path& path);

struct PanelSeries {
  std::string label;
  const SinghCurve* curve = nullptr;
  LineStyle style = LineStyle::solid;
};

/// Several precise curves on one set of axes, with a legend.
std::string render_panel_svg(std::string_view title, const std::vector<PanelSeries>& series);

std::string format_report_json(const Scenario& scenario, const CoverageReport& report);

/// Writes bytes exactly (binary mode, LF preserved). Throws std::runtime_error on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace singh
