#include "singh/singh.h"

#include <exception>
#include <new>
#include <string>

#include "singh/errors.hpp"
#include "singh/presets.hpp"
#include "singh/scenario.hpp"

struct singh_scenario {
  singh::Scenario scenario;
  std::string document;
};

struct singh_result {
  singh::SinghResult result;
  singh::CoverageReport report;
};

namespace {

thread_local std::string g_last_error;

singh_status fail(singh_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Maps the exception in flight to a status code.
singh_status translate() {
  try {
    throw;
  } catch (const singh::ParseError& e) {
    return fail(SINGH_ERR_PARSE, e.what());
  } catch (const singh::ValidationError& e) {
    return fail(SINGH_ERR_VALIDATION, e.what());
  } catch (const singh::DomainError& e) {
    return fail(SINGH_ERR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SINGH_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(SINGH_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(SINGH_ERR_RUNTIME, "unknown error");
  }
}

template <class F>
singh_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SINGH_OK;
  } catch (...) {
    return translate();
  }
}

singh_classification to_c(singh::Classification c) {
  switch (c) {
    case singh::Classification::valid: return SINGH_VALID;
    case singh::Classification::overconfident: return SINGH_OVERCONFIDENT;
    case singh::Classification::conservative: return SINGH_CONSERVATIVE;
    case singh::Classification::favourable: return SINGH_FAVOURABLE;
  }
  return SINGH_VALID;
}

const singh::SinghCurve* pick(const singh_result* r, singh_curve_id id) {
  if (r == nullptr) return nullptr;
  if (const auto* band = std::get_if<singh::SinghBand>(&r->result)) {
    if (id == SINGH_CURVE_LOWER) return &band->lower_curve;
    if (id == SINGH_CURVE_UPPER) return &band->upper_curve;
    return nullptr;
  }
  return id == SINGH_CURVE_MAIN ? &std::get<singh::SinghCurve>(r->result) : nullptr;
}

singh_result* make_result(const singh::Scenario& s, singh::SinghResult result) {
  auto* out = new singh_result{std::move(result), {}};
  out->report = singh::classify(out->result, s.delta);
  return out;
}

}  // namespace

extern "C" {

const char* singh_version(void) { return "0.1.0"; }

const char* singh_last_error(void) { return g_last_error.c_str(); }

singh_status singh_scenario_parse(const char* text, size_t length, singh_scenario** out) {
  if (text == nullptr || out == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new singh_scenario{singh::parse_scenario(std::string_view(text, length)), {}}; });
}

singh_status singh_scenario_load(const char* path, singh_scenario** out) {
  if (path == nullptr || out == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new singh_scenario{singh::load_scenario(path), {}}; });
}

void singh_scenario_free(singh_scenario* scenario) { delete scenario; }

singh_status singh_scenario_set_replicates(singh_scenario* scenario, uint64_t m) {
  if (scenario == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null scenario");
  return guarded([&] {
    singh::Scenario updated = scenario->scenario;
    updated.m = static_cast<std::size_t>(m);
    updated.validate();
    scenario->scenario = std::move(updated);
  });
}

singh_status singh_scenario_set_seed(singh_scenario* scenario, uint64_t seed) {
  if (scenario == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null scenario");
  return guarded([&] { scenario->scenario.seed = seed; });
}

singh_status singh_scenario_set_outputs(singh_scenario* scenario, unsigned outputs) {
  if (scenario == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null scenario");
  return guarded([&] {
    singh::Scenario updated = scenario->scenario;
    updated.outputs = outputs;
    updated.validate();
    scenario->scenario = std::move(updated);
  });
}

const char* singh_scenario_name(const singh_scenario* scenario) {
  return scenario == nullptr ? "" : scenario->scenario.name.c_str();
}

const char* singh_scenario_document(singh_scenario* scenario) {
  if (scenario == nullptr) return "";
  scenario->document = singh::to_document(scenario->scenario);
  return scenario->document.c_str();
}

singh_status singh_scenario_evaluate(const singh_scenario* scenario, unsigned workers, singh_result** out) {
  if (scenario == nullptr || out == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = make_result(scenario->scenario, singh::evaluate_scenario(scenario->scenario, {workers}));
  });
}

singh_status singh_scenario_run(const singh_scenario* scenario, const char* out_dir, unsigned workers,
                                singh_result** out) {
  if (scenario == nullptr || out_dir == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null argument");
  if (out != nullptr) *out = nullptr;
  return guarded([&] {
    auto outcome = singh::run_scenario(scenario->scenario, out_dir, {workers});
    if (out != nullptr) *out = new singh_result{std::move(outcome.result), outcome.report};
  });
}

void singh_result_free(singh_result* result) { delete result; }

int singh_result_is_band(const singh_result* result) {
  return result != nullptr && singh::is_band(result->result) ? 1 : 0;
}

double singh_result_eval(const singh_result* result, singh_curve_id curve, double alpha) {
  const auto* c = pick(result, curve);
  return c == nullptr ? -1.0 : c->eval(alpha);
}

uint64_t singh_result_replicates(const singh_result* result) {
  return result == nullptr ? 0 : singh::coverage_curve(result->result).replicates();
}

uint64_t singh_result_never_count(const singh_result* result, singh_curve_id curve) {
  const auto* c = pick(result, curve);
  return c == nullptr ? 0 : c->never_count();
}

singh_classification singh_result_classification(const singh_result* result) {
  return result == nullptr ? SINGH_VALID : to_c(result->report.classification);
}

int singh_result_valid(const singh_result* result) { return result != nullptr && result->report.valid ? 1 : 0; }

double singh_result_max_deficit(const singh_result* result) {
  return result == nullptr ? 0.0 : result->report.max_deficit;
}

double singh_result_conservatism_area(const singh_result* result) {
  return result == nullptr ? 0.0 : result->report.conservatism_area;
}

double singh_result_dkw_epsilon(const singh_result* result) {
  return result == nullptr ? 0.0 : result->report.dkw_epsilon;
}

size_t singh_preset_count(void) { return singh::presets().size(); }

const char* singh_preset_name(size_t index) {
  const auto& all = singh::presets();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

const char* singh_preset_description(size_t index) {
  const auto& all = singh::presets();
  return index < all.size() ? all[index].description.c_str() : nullptr;
}

singh_status singh_preset_run(const char* name, const char* out_dir, uint64_t replicates, const uint64_t* seed,
                              unsigned workers, singh_preset_callback callback, void* user) {
  if (name == nullptr || out_dir == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, "null argument");
  const singh::Preset* preset = singh::find_preset(name);
  if (preset == nullptr) return fail(SINGH_ERR_INVALID_ARGUMENT, ("unknown preset '" + std::string(name) + "'").c_str());
  return guarded([&] {
    singh::PresetOptions options;
    if (replicates != 0) options.replicates = static_cast<std::size_t>(replicates);
    if (seed != nullptr) options.seed = *seed;
    options.run.workers = workers;
    if (callback != nullptr) {
      options.on_scenario = [&](const singh::ScenarioOutcome& o) {
        const singh_result view{o.result, o.report};
        callback(o.name.c_str(), &view, user);
      };
    }
    singh::run_preset(*preset, out_dir, options);
  });
}

}  // extern "C"
