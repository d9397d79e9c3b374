#include "singh/presets.hpp"

#include <algorithm>
#include <stdexcept>

#include "singh/emit.hpp"

namespace singh {
namespace {

std::string cp_local(std::string_view name, std::string_view p, std::string_view n, std::string_view seed) {
  return "name = " + std::string(name) +
         "\nstructure = clopper_pearson\ntarget = bernoulli\np = " + std::string(p) + "\nn = " + std::string(n) +
         "\nm = 10000\nseed = " + std::string(seed) + "\n";
}

std::string cbox(std::string_view name, std::string_view c, std::string_view seed) {
  return "name = " + std::string(name) + "\nstructure = scaled_cbox\nc = " + std::string(c) +
         "\ntarget = bernoulli\np = 0.4\nn = 20\nm = 10000\nseed = " + std::string(seed) + "\n";
}

std::string chebyshev(std::string_view name, std::string_view p, std::string_view n, std::string_view seed) {
  return "name = " + std::string(name) +
         "\nstructure = chebyshev_ucl\ntarget = scaled_bernoulli\nmean = 2\np = " + std::string(p) +
         "\nn = " + std::string(n) + "\nm = 10000\nseed = " + std::string(seed) + "\noutputs = csv,report\n";
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;

  out.push_back({"fig1", "Student-t pivot on N(4, 3), n = 10",
                 {"# Pivot for a normal mean with unknown variance.\n"
                  "name = fig1\n"
                  "structure = student_t_pivot\n"
                  "target = normal\n"
                  "mu = 4\n"
                  "sigma = 3\n"
                  "n = 10\n"
                  "m = 10000\n"
                  "seed = 1\n"},
                 {}});

  out.push_back({"fig2", "Jeffreys posterior for a Bernoulli rate, theta0 = 0.4, n = 10",
                 {"name = fig2\n"
                  "structure = jeffreys\n"
                  "target = bernoulli\n"
                  "theta0 = 0.4\n"
                  "n = 10\n"
                  "m = 10000\n"
                  "seed = 2\n"},
                 {}});

  out.push_back({"fig3", "Clopper-Pearson c-box, theta0 = 0.4, n = 10", {cp_local("fig3", "0.4", "10", "3")}, {}});

  out.push_back({"fig4", "Empirical predictive box on 0.5 N(4, 3) + 0.5 N(5, 1.5), n = 10",
                 {"# The truth is the next draw from the same mixture.\n"
                  "name = fig4\n"
                  "structure = empirical_predictive\n"
                  "target = gaussian_mixture\n"
                  "weights = 0.5, 0.5\n"
                  "mus = 4, 5\n"
                  "sigmas = 3, 1.5\n"
                  "predict = true\n"
                  "n = 10\n"
                  "m = 10000\n"
                  "seed = 4\n"},
                 {}});

  out.push_back({"fig5", "Clopper-Pearson at theta0 = 0.4 for n = 10, 50, 250",
                 {cp_local("fig5_n10", "0.4", "10", "5"), cp_local("fig5_n50", "0.4", "50", "5"),
                  cp_local("fig5_n250", "0.4", "250", "5")},
                 {}});

  out.push_back({"fig6", "Clopper-Pearson at n = 20 for theta0 = 0.01, 0.05, 0.2, 0.5",
                 {cp_local("fig6_theta0.01", "0.01", "20", "6"), cp_local("fig6_theta0.05", "0.05", "20", "6"),
                  cp_local("fig6_theta0.2", "0.2", "20", "6"), cp_local("fig6_theta0.5", "0.5", "20", "6")},
                 {}});

  out.push_back({"fig7", "Scaled Clopper-Pearson c-box at theta0 = 0.4, n = 20, c = 0.5, 1, 3",
                 {cbox("fig7_c0.5", "0.5", "7"), cbox("fig7_c1", "1", "7"), cbox("fig7_c3", "3", "7")},
                 {}});

  out.push_back({"fig8", "Global Clopper-Pearson over 100 rates in [0, 1], n = 10",
                 {"# Grid points sit at the centres of 100 equal cells.\n"
                  "name = fig8\n"
                  "structure = clopper_pearson\n"
                  "target = bernoulli\n"
                  "grid_lo = 0\n"
                  "grid_hi = 1\n"
                  "grid_k = 100\n"
                  "grid_inclusive = false\n"
                  "n = 10\n"
                  "m = 1000\n"
                  "seed = 8\n"},
                 {}});

  Preset fig9{"fig9", "Chebyshev UCL on scaled Bernoulli data (mean 2), n = 5 and 30", {}, {}};
  for (std::string_view n : {"5", "30"}) {
    Panel panel{"fig9_n" + std::string(n), "Chebyshev UCL, n = " + std::string(n), {}, {}};
    for (std::string_view p : {"0.05", "0.2", "0.5"}) {
      const std::string name = "fig9_n" + std::string(n) + "_p" + std::string(p);
      fig9.documents.push_back(chebyshev(name, p, n, "9"));
      panel.members.push_back(name);
      panel.labels.push_back("p = " + std::string(p));
    }
    fig9.panels.push_back(std::move(panel));
  }
  out.push_back(std::move(fig9));
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset* find_preset(std::string_view name) noexcept {
  const auto& all = presets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == name; });
  return it == all.end() ? nullptr : &*it;
}

std::vector<Scenario> preset_scenarios(const Preset& preset, const PresetOptions& options) {
  std::vector<Scenario> out;
  for (const auto& doc : preset.documents) {
    Scenario s = parse_scenario(doc);
    if (options.replicates) s.m = *options.replicates;
    if (options.seed) s.seed = *options.seed;
    s.validate();
    out.push_back(std::move(s));
  }
  return out;
}

PresetOutcome run_preset(const Preset& preset, const std::filesystem::path& out_dir, const PresetOptions& options) {
  PresetOutcome outcome;
  std::filesystem::create_directories(out_dir);
  for (const auto& s : preset_scenarios(preset, options)) {
    write_file(out_dir / (s.name + ".scenario"), to_document(s));
    outcome.scenarios.push_back(run_scenario(s, out_dir, options.run));
    if (options.on_scenario) options.on_scenario(outcome.scenarios.back());
  }

  static constexpr LineStyle kStyles[] = {LineStyle::solid, LineStyle::dashed, LineStyle::dash_dot};
  for (const auto& panel : preset.panels) {
    std::vector<PanelSeries> series;
    for (std::size_t i = 0; i < panel.members.size(); ++i) {
      const auto it = std::find_if(outcome.scenarios.begin(), outcome.scenarios.end(),
                                   [&](const ScenarioOutcome& o) { return o.name == panel.members[i]; });
      if (it == outcome.scenarios.end() || is_band(it->result)) {
        throw std::logic_error("panel member '" + panel.members[i] + "' is not a precise scenario of the preset");
      }
      series.push_back({panel.labels[i], &std::get<SinghCurve>(it->result), kStyles[i % 3]});
    }
    outcome.panel_files.push_back(out_dir / (panel.name + ".svg"));
    write_file(outcome.panel_files.back(), render_panel_svg(panel.title, series));
  }
  return outcome;
}

}  // namespace singh
