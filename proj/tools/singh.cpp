// singh: run Singh plot scenarios and the bundled figure presets.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "singh/singh.h"

namespace {

const char* classification_name(singh_classification c) {
  switch (c) {
    case SINGH_VALID: return "valid";
    case SINGH_OVERCONFIDENT: return "overconfident";
    case SINGH_CONSERVATIVE: return "conservative";
    case SINGH_FAVOURABLE: return "favourable";
  }
  return "?";
}

int report_error(singh_status status) {
  std::fprintf(stderr, "singh: %s\n", singh_last_error());
  return static_cast<int>(status);
}

void print_summary(const char* name, const singh_result* r) {
  std::printf("%s: %s (max deficit %.6f, conservatism area %.6f, tolerance %.6f)\n", name,
              classification_name(singh_result_classification(r)), singh_result_max_deficit(r),
              singh_result_conservatism_area(r), singh_result_dkw_epsilon(r));
}

unsigned format_flags(const std::string& format) {
  if (format == "csv") return SINGH_OUTPUT_CSV | SINGH_OUTPUT_REPORT;
  if (format == "svg") return SINGH_OUTPUT_SVG | SINGH_OUTPUT_REPORT;
  return SINGH_OUTPUT_CSV | SINGH_OUTPUT_SVG | SINGH_OUTPUT_REPORT;
}

int run_command(const std::string& path, const std::string& out_dir, std::optional<std::uint64_t> replicates,
                std::optional<std::uint64_t> seed, const std::string& format, unsigned workers) {
  singh_scenario* scenario = nullptr;
  singh_status status = singh_scenario_load(path.c_str(), &scenario);
  if (status != SINGH_OK) return report_error(status);

  if (replicates) status = singh_scenario_set_replicates(scenario, *replicates);
  if (status == SINGH_OK && seed) status = singh_scenario_set_seed(scenario, *seed);
  if (status == SINGH_OK && !format.empty()) status = singh_scenario_set_outputs(scenario, format_flags(format));

  singh_result* result = nullptr;
  if (status == SINGH_OK) status = singh_scenario_run(scenario, out_dir.c_str(), workers, &result);
  if (status == SINGH_OK) print_summary(singh_scenario_name(scenario), result);

  singh_result_free(result);
  singh_scenario_free(scenario);
  return status == SINGH_OK ? 0 : report_error(status);
}

int preset_command(const std::string& name, const std::string& out_dir, std::optional<std::uint64_t> replicates,
                   std::optional<std::uint64_t> seed, unsigned workers) {
  const std::uint64_t* seed_ptr = seed ? &*seed : nullptr;
  const singh_status status = singh_preset_run(
      name.c_str(), out_dir.c_str(), replicates.value_or(0), seed_ptr, workers,
      [](const char* scenario, const singh_result* r, void*) { print_summary(scenario, r); }, nullptr);
  return status == SINGH_OK ? 0 : report_error(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singh plots: coverage checks for confidence structures"};
  app.set_version_flag("--version", std::string(singh_version()));
  app.require_subcommand(1);

  unsigned workers = 0;
  app.add_option("-j,--jobs", workers, "Worker threads (0 = all cores)");

  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> replicates;
  std::optional<std::uint64_t> seed;
  std::string format;

  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--replicates", replicates, "Override m");
  run->add_option("--seed", seed, "Override the seed");
  run->add_option("--format", format, "Artifacts to write")->check(CLI::IsMember({"csv", "svg", "both"}));

  std::string preset_name;
  std::string preset_out = ".";
  std::optional<std::uint64_t> preset_replicates;
  std::optional<std::uint64_t> preset_seed;
  std::vector<std::string> known_presets;
  std::string preset_names;
  for (std::size_t i = 0; i < singh_preset_count(); ++i) {
    known_presets.emplace_back(singh_preset_name(i));
    preset_names += (i ? ", " : "") + known_presets.back();
  }
  auto* preset = app.add_subcommand("preset", "Run a figure preset (" + preset_names + ")");
  preset->add_option("name", preset_name, "Preset name")->required()->check(CLI::IsMember(known_presets));
  preset->add_option("--out", preset_out, "Output directory");
  preset->add_option("--replicates", preset_replicates, "Override m for every scenario");
  preset->add_option("--seed", preset_seed, "Override the seed for every scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(SINGH_ERR_PARSE);
  }

  if (*run) return run_command(scenario_path, out_dir, replicates, seed, format, workers);
  return preset_command(preset_name, preset_out, preset_replicates, preset_seed, workers);
}
