#include "singh/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "singh/emit.hpp"
#include "singh/errors.hpp"

namespace singh {
namespace {

constexpr std::array<std::string_view, 22> kKnownKeys{
    "name",   "structure", "c",       "target",  "p",       "mu",     "sigma",          "weights",
    "mus",    "sigmas",    "theta0",  "grid_lo", "grid_hi", "grid_k", "grid_inclusive", "mean",
    "n",      "m",         "seed",    "delta",   "predict", "outputs",
};

struct Entry {
  std::string value;
  std::size_t line = 0;
};

using Entries = std::map<std::string, Entry, std::less<>>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Entries tokenize(std::string_view text) {
  Entries entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "missing key before '='");
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      throw ParseError(line_no, "duplicate key '" + key + "'");
    }
  }
  return entries;
}

double to_real(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError(e.line, "'" + key + "' expects a finite number, got '" + e.value + "'");
  }
  return v;
}

template <class Int>
Int to_integer(const std::string& key, const Entry& e) {
  Int v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(e.line, "'" + key + "' expects a non-negative integer, got '" + e.value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const Entry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw ParseError(e.line, "'" + key + "' expects true or false, got '" + e.value + "'");
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = s.find(',');
    parts.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return parts;
}

std::vector<double> to_real_list(const std::string& key, const Entry& e) {
  std::vector<double> out;
  for (auto part : split_list(e.value)) out.push_back(to_real(key, Entry{std::string(part), e.line}));
  return out;
}

unsigned to_outputs(const Entry& e) {
  unsigned flags = 0;
  for (auto part : split_list(e.value)) {
    if (part == "csv") {
      flags |= kOutputCsv;
    } else if (part == "svg") {
      flags |= kOutputSvg;
    } else if (part == "report") {
      flags |= kOutputReport;
    } else {
      throw ParseError(e.line, "unknown output '" + std::string(part) + "' (expected csv, svg or report)");
    }
  }
  return flags;
}

// Typed view over the tokenized document; tracks which keys were consumed so
// leftovers can be reported as not applicable.
class Reader {
 public:
  explicit Reader(Entries entries) : entries_(std::move(entries)) {}

  const Entry* find(std::string_view key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    used_.push_back(it->first);
    return &it->second;
  }

  bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

  std::optional<double> real(std::string_view key) {
    const Entry* e = find(key);
    if (e == nullptr) return std::nullopt;
    return to_real(std::string(key), *e);
  }

  void reject_unused(std::string_view context) const {
    for (const auto& [key, entry] : entries_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw ValidationError("key '" + key + "' (line " + std::to_string(entry.line) + ") does not apply to " +
                              std::string(context));
      }
    }
  }

 private:
  Entries entries_;
  std::vector<std::string> used_;
};

const Entry& require(Reader& r, std::string_view key) {
  const Entry* e = r.find(key);
  if (e == nullptr) throw ValidationError("missing required key '" + std::string(key) + "'");
  return *e;
}

// Value of the inferred parameter given either under its own key or as theta0.
std::optional<double> aliased(Reader& r, std::string_view key) {
  const auto direct = r.real(key);
  const auto theta0 = r.real("theta0");
  if (direct && theta0) throw ValidationError("set either '" + std::string(key) + "' or 'theta0', not both");
  return direct ? direct : theta0;
}

bool valid_name(std::string_view name) {
  if (name.empty() || name == "." || name == "..") return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
           ch == '-' || ch == '.';
  });
}

std::string real_text(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string list_text(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += real_text(values[i]);
  }
  return out;
}

}  // namespace

void Scenario::validate() const {
  if (!valid_name(name)) throw ValidationError("name must be non-empty and use only letters, digits, '_', '-', '.'");
  try {
    structure.validate();
    target.validate();
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  if (n < structure.minimum_sample_size()) {
    throw ValidationError("n must be at least " + std::to_string(structure.minimum_sample_size()) + " for " +
                          std::string(to_string(structure.kind)));
  }
  if (m < 1) throw ValidationError("m must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
  if (outputs == 0 || (outputs & ~kAllOutputs) != 0) throw ValidationError("outputs must name csv, svg or report");

  if (structure.requires_binary_data() && target.family != Family::bernoulli) {
    throw ValidationError(std::string(to_string(structure.kind)) + " requires target = bernoulli");
  }
  if (structure.kind == StructureKind::student_t_pivot &&
      target.family != Family::normal && target.family != Family::gaussian_mixture) {
    throw ValidationError("student_t_pivot requires a continuous target (normal or gaussian_mixture)");
  }
  if (structure.kind == StructureKind::empirical_predictive && !target.predictive) {
    throw ValidationError("empirical_predictive requires predict = true");
  }
  if (structure.kind != StructureKind::empirical_predictive && target.predictive) {
    throw ValidationError("predict = true is only meaningful for empirical_predictive");
  }

  if (grid) {
    if (target.predictive) throw ValidationError("global mode cannot be combined with predict = true");
    if (target.family == Family::gaussian_mixture) throw ValidationError("global mode needs a parametric target");
    if (grid->k < 1) throw ValidationError("grid_k must be at least 1");
    if (!(grid->lo <= grid->hi)) throw ValidationError("grid_lo must not exceed grid_hi");
    try {
      for (double theta : grid->grid().thetas) target.with_grid_value(theta).validate();
    } catch (const DomainError& e) {
      throw ValidationError(std::string("grid value out of range: ") + e.what());
    }
  }
}

Scenario parse_scenario(std::string_view text) {
  Reader r(tokenize(text));
  Scenario s;

  if (const Entry* e = r.find("name")) s.name = e->value;

  const Entry& structure = require(r, "structure");
  const auto kind = parse_structure_kind(structure.value);
  if (!kind) throw ParseError(structure.line, "unknown structure '" + structure.value + "'");
  s.structure.kind = *kind;

  if (const auto c = r.real("c")) {
    if (!(*c > 0.0)) throw ValidationError("c must be positive");
    if (*kind != StructureKind::scaled_cbox) throw ValidationError("c only applies to structure = scaled_cbox");
    s.structure.c = *c;
  } else if (*kind == StructureKind::scaled_cbox) {
    throw ValidationError("scaled_cbox requires c");
  }

  const Entry& target = require(r, "target");
  const auto family = parse_family(target.value);
  if (!family) throw ParseError(target.line, "unknown target '" + target.value + "'");
  s.target.family = *family;

  const bool global = r.has("grid_lo") || r.has("grid_hi") || r.has("grid_k");
  if (global) {
    GridSpec g;
    g.lo = to_real("grid_lo", require(r, "grid_lo"));
    g.hi = to_real("grid_hi", require(r, "grid_hi"));
    g.k = to_integer<std::size_t>("grid_k", require(r, "grid_k"));
    if (const Entry* e = r.find("grid_inclusive")) g.inclusive = to_bool("grid_inclusive", *e);
    s.grid = g;
  }

  auto grid_swept = [&](std::string_view key) {
    if (global && (r.has(key) || r.has("theta0"))) {
      throw ValidationError("'" + std::string(key) + "' is swept by the grid in global mode");
    }
  };

  switch (*family) {
    case Family::normal: {
      grid_swept("mu");
      const auto mu = aliased(r, "mu");
      if (!mu && !global) throw ValidationError("target normal requires mu (or theta0)");
      if (mu) s.target.mu = *mu;
      const auto sigma = r.real("sigma");
      if (!sigma) throw ValidationError("target normal requires sigma");
      s.target.sigma = *sigma;
      break;
    }
    case Family::bernoulli: {
      grid_swept("p");
      const auto p = aliased(r, "p");
      if (!p && !global) throw ValidationError("target bernoulli requires p (or theta0)");
      if (p) s.target.p = *p;
      break;
    }
    case Family::scaled_bernoulli: {
      grid_swept("p");
      const auto p = r.real("p");
      if (!p && !global) throw ValidationError("target scaled_bernoulli requires p");
      if (p) s.target.p = *p;
      const auto mean = aliased(r, "mean");
      if (!mean) throw ValidationError("target scaled_bernoulli requires mean (or theta0)");
      s.target.mean = *mean;
      break;
    }
    case Family::gaussian_mixture:
      s.target.weights = to_real_list("weights", require(r, "weights"));
      s.target.mus = to_real_list("mus", require(r, "mus"));
      s.target.sigmas = to_real_list("sigmas", require(r, "sigmas"));
      break;
  }
  if (global && *family != Family::gaussian_mixture) {
    // Placeholder for the swept parameter; every grid value replaces it.
    s.target = s.target.with_grid_value(s.grid->grid().thetas.front());
  }

  if (const Entry* e = r.find("predict")) s.target.predictive = to_bool("predict", *e);
  s.n = to_integer<std::size_t>("n", require(r, "n"));
  if (const Entry* e = r.find("m")) s.m = to_integer<std::size_t>("m", *e);
  if (const Entry* e = r.find("seed")) s.seed = to_integer<std::uint64_t>("seed", *e);
  if (const auto d = r.real("delta")) s.delta = *d;
  if (const Entry* e = r.find("outputs")) s.outputs = to_outputs(*e);

  r.reject_unused("structure = " + std::string(to_string(*kind)) + ", target = " + std::string(to_string(*family)));
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string to_document(const Scenario& s) {
  std::ostringstream out;
  out << "name = " << s.name << '\n';
  out << "structure = " << to_string(s.structure.kind) << '\n';
  if (s.structure.kind == StructureKind::scaled_cbox) out << "c = " << real_text(s.structure.c) << '\n';
  out << "target = " << to_string(s.target.family) << '\n';
  switch (s.target.family) {
    case Family::normal:
      if (!s.grid) out << "mu = " << real_text(s.target.mu) << '\n';
      out << "sigma = " << real_text(s.target.sigma) << '\n';
      break;
    case Family::bernoulli:
      if (!s.grid) out << "p = " << real_text(s.target.p) << '\n';
      break;
    case Family::scaled_bernoulli:
      if (!s.grid) out << "p = " << real_text(s.target.p) << '\n';
      out << "mean = " << real_text(s.target.mean) << '\n';
      break;
    case Family::gaussian_mixture:
      out << "weights = " << list_text(s.target.weights) << '\n';
      out << "mus = " << list_text(s.target.mus) << '\n';
      out << "sigmas = " << list_text(s.target.sigmas) << '\n';
      break;
  }
  if (s.target.predictive) out << "predict = true\n";
  if (s.grid) {
    out << "grid_lo = " << real_text(s.grid->lo) << '\n';
    out << "grid_hi = " << real_text(s.grid->hi) << '\n';
    out << "grid_k = " << s.grid->k << '\n';
    out << "grid_inclusive = " << (s.grid->inclusive ? "true" : "false") << '\n';
  }
  out << "n = " << s.n << '\n';
  out << "m = " << s.m << '\n';
  out << "seed = " << s.seed << '\n';
  out << "delta = " << real_text(s.delta) << '\n';
  std::string outputs;
  if (s.outputs & kOutputCsv) outputs += "csv,";
  if (s.outputs & kOutputSvg) outputs += "svg,";
  if (s.outputs & kOutputReport) outputs += "report,";
  if (!outputs.empty()) outputs.pop_back();
  out << "outputs = " << outputs << '\n';
  return out.str();
}

SinghResult evaluate_scenario(const Scenario& s, RunOptions options) {
  s.validate();
  const SeededStream root(s.seed);
  if (s.grid) return global_singh(s.structure, s.target, s.grid->grid(), s.n, s.m, root, options);
  return singh_curve(s.structure, s.target, s.n, s.m, root, options);
}

ScenarioOutcome run_scenario(const Scenario& s, const std::filesystem::path& out_dir, RunOptions options) {
  ScenarioOutcome outcome{s.name, evaluate_scenario(s, options), {}, {}};
  outcome.report = classify(outcome.result, s.delta);

  std::filesystem::create_directories(out_dir);
  if (s.outputs & kOutputCsv) {
    outcome.files.push_back(out_dir / (s.name + ".csv"));
    emit_csv(outcome.result, outcome.files.back());
  }
  if (s.outputs & kOutputSvg) {
    outcome.files.push_back(out_dir / (s.name + ".svg"));
    emit_svg(outcome.result, outcome.report, s.name, outcome.files.back());
  }
  if (s.outputs & kOutputReport) {
    outcome.files.push_back(out_dir / (s.name + ".report.json"));
    write_file(outcome.files.back(), format_report_json(s, outcome.report));
  }
  return outcome;
}

}  // namespace singh
