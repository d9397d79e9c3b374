#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singh/scenario.hpp"

namespace singh {

/// Several scenarios of one preset drawn on shared axes.
struct Panel {
  std::string name;
  std::string title;
  std::vector<std::string> members;
  std::vector<std::string> labels;
};

/// A named bundle of scenario documents reproducing one figure.
struct Preset {
  std::string name;
  std::string description;
  std::vector<std::string> documents;
  std::vector<Panel> panels;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name) noexcept;

struct PresetOptions {
  std::optional<std::size_t> replicates;
  std::optional<std::uint64_t> seed;
  RunOptions run;
  std::function<void(const ScenarioOutcome&)> on_scenario;
};

/// Parsed scenarios of a preset, with the overrides applied and revalidated.
std::vector<Scenario> preset_scenarios(const Preset& preset, const PresetOptions& options = {});

struct PresetOutcome {
  std::vector<ScenarioOutcome> scenarios;
  std::vector<std::filesystem::path> panel_files;
};

/// Runs every scenario of the preset into out_dir, writing each scenario's
/// canonical document as <name>.scenario next to its artifacts, then the panels.
PresetOutcome run_preset(const Preset& preset, const std::filesystem::path& out_dir,
                         const PresetOptions& options = {});

}  // namespace singh
