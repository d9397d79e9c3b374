#include "singh/emit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "singh/errors.hpp"
#include "singh/scenario.hpp"

namespace singh {
namespace {

std::string general9(double v) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

// Smallest 9-significant-digit decimal >= v, as the double nearest to it.
double round_up_9(double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  std::array<char, 40> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 8);
  std::string text(buf.data(), res.ptr);
  double back = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), back);
  if (back >= v) return back;

  // Bump the last mantissa digit of d.dddddddde-XX, carrying as needed.
  const auto e_pos = text.find('e');
  std::string mantissa = text.substr(0, e_pos);
  int exponent = std::stoi(text.substr(e_pos + 1));
  int i = static_cast<int>(mantissa.size()) - 1;
  while (i >= 0) {
    if (mantissa[i] == '.') {
      --i;
      continue;
    }
    if (mantissa[i] == '9') {
      mantissa[i] = '0';
      --i;
      continue;
    }
    ++mantissa[i];
    break;
  }
  if (i < 0) {
    mantissa = "1.00000000";
    ++exponent;
  }
  text = mantissa + "e" + std::to_string(exponent);
  std::from_chars(text.data(), text.data() + text.size(), back);
  return std::min(back, 1.0);
}

std::vector<double> csv_alphas(const SinghResult& result) {
  std::vector<double> alphas{0.0};
  auto add = [&](const SinghCurve& c) {
    for (double v : c.values()) alphas.push_back(round_up_9(v));
  };
  if (const auto* band = std::get_if<SinghBand>(&result)) {
    add(band->lower_curve);
    add(band->upper_curve);
  } else {
    add(std::get<SinghCurve>(result));
  }
  alphas.push_back(1.0);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  return alphas;
}

std::string never_text(const SinghCurve& c) {
  return c.is_exact() ? general9(c.never_weight()) : std::to_string(c.never_count());
}

// Plot geometry, in SVG user units.
constexpr double kLeft = 70.0;
constexpr double kTop = 50.0;
constexpr double kSize = 400.0;
constexpr double kWidth = kLeft + kSize + 30.0;
constexpr double kHeight = kTop + kSize + 60.0;

std::string fixed2(double v) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  std::string s(buf.data(), res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

std::string px(double alpha) { return fixed2(kLeft + kSize * alpha); }
std::string py(double coverage) { return fixed2(kTop + kSize * (1.0 - coverage)); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string dash_attr(LineStyle style) {
  switch (style) {
    case LineStyle::solid: return "";
    case LineStyle::dashed: return " stroke-dasharray=\"8,5\"";
    case LineStyle::dash_dot: return " stroke-dasharray=\"8,4,2,4\"";
    case LineStyle::dotted: return " stroke-dasharray=\"2,4\"";
  }
  return "";
}

std::string step_path(const SinghCurve& curve) {
  std::string d = "M" + px(0.0) + "," + py(curve.eval(0.0));
  std::string last_y = py(curve.eval(0.0));
  const auto values = curve.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    const std::string y = py(curve.eval(values[i]));
    if (y == last_y) continue;
    d += " H" + px(values[i]) + " V" + y;
    last_y = y;
  }
  d += " H" + px(1.0);
  return d;
}

std::string path_element(const std::string& d, LineStyle style, std::string_view stroke, double width) {
  return "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
         fixed2(width) + "\"" + dash_attr(style) + "/>\n";
}

std::string diagonal(LineStyle style) {
  return path_element("M" + px(0.0) + "," + py(0.0) + " L" + px(1.0) + "," + py(1.0), style, "#666666", 1.0);
}

std::string open_document(std::string_view title) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed2(kWidth) + "\" height=\"" +
         fixed2(kHeight) + "\" viewBox=\"0 0 " + fixed2(kWidth) + " " + fixed2(kHeight) + "\">\n";
  out += "<title>" + xml_escape(title) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fixed2(kWidth) + "\" height=\"" + fixed2(kHeight) +
         "\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed2(kLeft + kSize / 2) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + xml_escape(title) + "</text>\n";

  // Frame, ticks and labels.
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + px(0) + "\" y1=\"" + py(0) + "\" x2=\"" + px(1) + "\" y2=\"" + py(0) + "\"/>\n";
  out += "<line x1=\"" + px(0) + "\" y1=\"" + py(0) + "\" x2=\"" + px(0) + "\" y2=\"" + py(1) + "\"/>\n";
  out += "<line x1=\"" + px(0) + "\" y1=\"" + py(1) + "\" x2=\"" + px(1) + "\" y2=\"" + py(1) + "\"/>\n";
  out += "<line x1=\"" + px(1) + "\" y1=\"" + py(0) + "\" x2=\"" + px(1) + "\" y2=\"" + py(1) + "\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = i / 5.0;
    out += "<line x1=\"" + px(t) + "\" y1=\"" + py(0) + "\" x2=\"" + px(t) + "\" y2=\"" + fixed2(kTop + kSize + 5) +
           "\"/>\n";
    out += "<line x1=\"" + fixed2(kLeft - 5) + "\" y1=\"" + py(t) + "\" x2=\"" + px(0) + "\" y2=\"" + py(t) +
           "\"/>\n";
  }
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double t = i / 5.0;
    const std::string label = fixed2(t).substr(0, 3);
    out += "<text x=\"" + px(t) + "\" y=\"" + fixed2(kTop + kSize + 20) + "\" text-anchor=\"middle\">" + label +
           "</text>\n";
    out += "<text x=\"" + fixed2(kLeft - 8) + "\" y=\"" + fixed2(kTop + kSize * (1.0 - t) + 4) +
           "\" text-anchor=\"end\">" + label + "</text>\n";
  }
  out += "<text x=\"" + fixed2(kLeft + kSize / 2) + "\" y=\"" + fixed2(kTop + kSize + 45) +
         "\" text-anchor=\"middle\">confidence level \xce\xb1</text>\n";
  out += "<text x=\"20\" y=\"" + fixed2(kTop + kSize / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fixed2(kTop + kSize / 2) + ")\">coverage S(\xce\xb1)</text>\n";
  out += "</g>\n";
  return out;
}

}  // namespace

std::string format_probability(double value) { return general9(value); }

std::string format_csv(const SinghResult& result) {
  std::string out;
  const auto alphas = csv_alphas(result);
  if (const auto* band = std::get_if<SinghBand>(&result)) {
    out += "alpha,coverage_lower,coverage_upper\n";
    for (double a : alphas) {
      out += general9(a) + "," + general9(band->lower_curve.eval(a)) + "," + general9(band->upper_curve.eval(a)) +
             "\n";
    }
    const char* key = band->lower_curve.is_exact() ? "# never_weight=" : "# never=";
    out += key + never_text(band->lower_curve) + "," + never_text(band->upper_curve) + "\n";
  } else {
    const auto& curve = std::get<SinghCurve>(result);
    out += "alpha,coverage\n";
    for (double a : alphas) out += general9(a) + "," + general9(curve.eval(a)) + "\n";
    out += (curve.is_exact() ? "# never_weight=" : "# never=") + never_text(curve) + "\n";
  }
  return out;
}

void emit_csv(const SinghResult& result, const std::filesystem::path& path) { write_file(path, format_csv(result)); }

CsvDocument parse_csv(std::string_view text) {
  CsvDocument doc;
  std::size_t line_no = 0;
  auto split = [](std::string_view line) {
    std::vector<std::string> cells;
    while (true) {
      const auto comma = line.find(',');
      cells.emplace_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    return cells;
  };
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_no, "malformed comment line");
      doc.never = std::string(line.substr(eq + 1));
      continue;
    }
    if (doc.header.empty()) {
      doc.header = split(line);
      continue;
    }
    auto cells = split(line);
    if (cells.size() != doc.header.size()) throw ParseError(line_no, "row width does not match header");
    doc.rows.push_back(std::move(cells));
  }
  if (doc.header.empty()) throw ParseError(line_no, "missing header");
  return doc;
}

std::string render_svg(const SinghResult& result, std::string_view title) {
  std::string out = open_document(title);
  if (const auto* band = std::get_if<SinghBand>(&result)) {
    out += path_element(step_path(band->upper_curve), LineStyle::solid, "#1f4e9c", 1.5);
    out += path_element(step_path(band->lower_curve), LineStyle::dashed, "#b22222", 1.5);
    out += diagonal(LineStyle::dotted);
  } else {
    // Single curves follow the precise-plot caption convention: dashed diagonal.
    out += path_element(step_path(std::get<SinghCurve>(result)), LineStyle::solid, "#1f4e9c", 1.5);
    out += diagonal(LineStyle::dashed);
  }
  out += "</svg>\n";
  return out;
}

void emit_svg(const SinghResult& result, const CoverageReport& report, std::string_view name,
              const std::filesystem::path& path) {
  const std::string title = std::string(name) + " (" + std::string(to_string(report.classification)) + ")";
  write_file(path, render_svg(result, title));
}

std::string render_panel_svg(std::string_view title, const std::vector<PanelSeries>& series) {
  static constexpr std::array<std::string_view, 4> kColours{"#1f4e9c", "#b22222", "#2e7d32", "#6a1b9a"};
  std::string out = open_document(title);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].curve == nullptr) throw std::invalid_argument("panel series without a curve");
    out += path_element(step_path(*series[i].curve), series[i].style, kColours[i % kColours.size()], 1.5);
  }
  out += diagonal(LineStyle::dotted);

  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 20.0 + 18.0 * static_cast<double>(i);
    out += "<line x1=\"" + fixed2(kLeft + 10) + "\" y1=\"" + fixed2(y) + "\" x2=\"" + fixed2(kLeft + 40) +
           "\" y2=\"" + fixed2(y) + "\" stroke=\"" + std::string(kColours[i % kColours.size()]) +
           "\" stroke-width=\"1.50\"" + dash_attr(series[i].style) + "/>\n";
    out += "<text x=\"" + fixed2(kLeft + 46) + "\" y=\"" + fixed2(y + 4) + "\">" + xml_escape(series[i].label) +
           "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string format_report_json(const Scenario& scenario, const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["name"] = scenario.name;
  j["mode"] = scenario.is_global() ? "global" : "local";
  j["structure"] = std::string(to_string(scenario.structure.kind));
  if (scenario.structure.kind == StructureKind::scaled_cbox) j["c"] = scenario.structure.c;
  j["target"] = std::string(to_string(scenario.target.family));
  if (scenario.grid) {
    j["grid"] = {{"lo", scenario.grid->lo},
                 {"hi", scenario.grid->hi},
                 {"k", scenario.grid->k},
                 {"inclusive", scenario.grid->inclusive}};
  }
  j["n"] = scenario.n;
  j["m"] = scenario.m;
  j["seed"] = scenario.seed;
  j["delta"] = scenario.delta;
  j["classification"] = std::string(to_string(report.classification));
  j["valid"] = report.valid;
  j["max_deficit"] = report.max_deficit;
  j["conservatism_area"] = report.conservatism_area;
  j["dkw_epsilon"] = report.dkw_epsilon;
  j["never_count"] = report.never_count;
  return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace singh
