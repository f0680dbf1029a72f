#include "pmg/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pmg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

const json& require_field(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw ParseError("expected an object", 0, path);
  auto it = object.find(key);
  if (it == object.end()) throw ParseError("missing field '" + std::string(key) + "'", 0, path);
  return *it;
}

std::string require_string(const json& object, const char* key, const std::string& path) {
  const json& value = require_field(object, key, path);
  if (!value.is_string()) throw ParseError("expected a string", 0, path + "." + key);
  return value.get<std::string>();
}

Rational read_length(const json& value, const std::string& path) {
  std::string literal;
  if (value.is_string()) {
    literal = value.get<std::string>();
  } else if (value.is_number()) {
    literal = value.dump();
  } else {
    throw ParseError("expected a string or number", 0, path);
  }
  try {
    return parse_rational(literal);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, path);
  }
}

}  // namespace

PMGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte), "");
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, "");
  const json& vertices = require_field(doc, "vertices", "");
  const json& edges = require_field(doc, "edges", "");
  if (!vertices.is_array()) throw ParseError("expected an array", 0, "vertices");
  if (!edges.is_array()) throw ParseError("expected an array", 0, "edges");

  PMGraph graph;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    std::string id = require_string(v, "id", path);
    long q = 0;
    if (auto it = v.find("q"); it != v.end()) {
      if (!it->is_number_integer()) throw ParseError("expected an integer", 0, path + ".q");
      q = it->get<long>();
    }
    graph.add_vertex(std::move(id), q);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    std::string u = require_string(e, "u", path);
    std::string v = require_string(e, "v", path);
    Rational length = read_length(require_field(e, "length", path), path + ".length");
    graph.add_edge(u, v, std::move(length));
  }
  return graph;
}

std::string write_graph(const PMGraph& graph) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const Vertex& v : graph.vertices()) doc["vertices"].push_back({{"id", v.id}, {"q", v.q}});
  doc["edges"] = ordered_json::array();
  for (const Edge& e : graph.edges()) {
    doc["edges"].push_back(
        {{"u", graph.vertex(e.u).id}, {"v", graph.vertex(e.v).id}, {"length", to_string(e.length)}});
  }
  return doc.dump(2) + "\n";
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "table") return ReportFormat::table;
  throw Error(ErrorCode::BadParameter, "unknown report format '" + std::string(text) + "'");
}

namespace {

const std::string& lookup(const std::vector<std::pair<std::string, std::string>>& fields, std::string_view name) {
  for (const auto& [key, value] : fields) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::BadParameter, "report has no field '" + std::string(name) + "'");
}

template <class S>
FormattedMeasure format_measure(const MeasureReport<S>& m, int digits) {
  FormattedMeasure out;
  out.kind = std::string(to_string(m.kind));
  for (const auto& pm : m.point_masses) out.point_masses.push_back({pm.vertex, format_scalar(pm.mass, digits)});
  for (const auto& ed : m.edge_densities) {
    out.edge_densities.push_back({ed.edge, ed.u, ed.v, to_string(ed.length), format_scalar(ed.density, digits)});
  }
  return out;
}

const char* const kInvariantNames[] = {"tau", "theta", "phi", "lambda", "epsilon", "z"};

}  // namespace

const std::string& FormattedReport::value(std::string_view name) const { return lookup(values, name); }
const std::string& FormattedReport::ratio(std::string_view name) const { return lookup(ratios, name); }

template <class S>
FormattedReport format_result(const ComputeResult<S>& result, int digits, std::string label) {
  const InvariantSet<S>& inv = result.invariants;
  FormattedReport out;
  out.label = std::move(label);
  out.mode = std::string(to_string(ScalarTraits<S>::mode));
  out.g = inv.g;
  out.gbar = inv.gbar;
  const S* fields[] = {&inv.tau, &inv.theta, &inv.phi, &inv.lambda, &inv.epsilon, &inv.z};
  out.values.emplace_back("length", format_scalar(inv.length, digits));
  for (std::size_t i = 0; i < 6; ++i) {
    out.values.emplace_back(kInvariantNames[i], format_scalar(*fields[i], digits));
    out.ratios.emplace_back(kInvariantNames[i], format_scalar(S(*fields[i] / inv.length), digits));
  }
  if (result.canonical) out.measures.push_back(format_measure(*result.canonical, digits));
  if (result.admissible) out.measures.push_back(format_measure(*result.admissible, digits));
  out.warnings = result.warnings;
  return out;
}

template FormattedReport format_result<Rational>(const ComputeResult<Rational>&, int, std::string);
template FormattedReport format_result<BigFloat>(const ComputeResult<BigFloat>&, int, std::string);
template FormattedReport format_result<double>(const ComputeResult<double>&, int, std::string);

std::string_view csv_header() {
  return "label,mode,g,gbar,length,tau,theta,phi,lambda,epsilon,z,"
         "tau/length,theta/length,phi/length,lambda/length,epsilon/length,z/length";
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_json(const FormattedReport& r) {
  ordered_json doc;
  if (!r.label.empty()) doc["label"] = r.label;
  doc["mode"] = r.mode;
  doc["g"] = r.g;
  doc["gbar"] = r.gbar;
  for (const auto& [key, value] : r.values) doc[key] = value;
  ordered_json ratios = ordered_json::object();
  for (const auto& [key, value] : r.ratios) ratios[key] = value;
  doc["ratios"] = ratios;
  if (!r.measures.empty()) {
    ordered_json measures = ordered_json::object();
    for (const auto& m : r.measures) {
      ordered_json points = ordered_json::object();
      for (const auto& pm : m.point_masses) points[pm.vertex] = pm.mass;
      ordered_json densities = ordered_json::array();
      for (const auto& ed : m.edge_densities) {
        densities.push_back({{"edge", ed.edge}, {"u", ed.u}, {"v", ed.v}, {"length", ed.length}, {"density", ed.density}});
      }
      measures[m.kind] = {{"point_masses", points}, {"edge_densities", densities}};
    }
    doc["measures"] = measures;
  }
  if (!r.warnings.empty()) doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

std::string emit_csv(const FormattedReport& r) {
  std::ostringstream out;
  out << csv_header() << "\n";
  out << csv_cell(r.label) << "," << r.mode << "," << r.g << "," << r.gbar;
  for (const auto& [key, value] : r.values) out << "," << csv_cell(value);
  for (const auto& [key, value] : r.ratios) out << "," << csv_cell(value);
  out << "\n";
  if (!r.measures.empty()) {
    out << "\nmeasure,part,target,length,value\n";
    for (const auto& m : r.measures) {
      for (const auto& pm : m.point_masses) out << m.kind << ",point," << csv_cell(pm.vertex) << ",," << pm.mass << "\n";
      for (const auto& ed : m.edge_densities) {
        out << m.kind << ",edge," << csv_cell(ed.u + "-" + ed.v) << "," << ed.length << "," << ed.density << "\n";
      }
    }
  }
  return out.str();
}

std::string emit_table(const FormattedReport& r) {
  std::size_t width = 12;
  for (const auto& [key, value] : r.values) width = std::max(width, value.size() + 2);
  std::ostringstream out;
  if (!r.label.empty()) out << r.label << "\n";
  out << "mode " << r.mode << ", g = " << r.g << ", gbar = " << r.gbar << "\n";
  out << std::left << std::setw(10) << "invariant" << std::setw(static_cast<int>(width)) << "value"
      << "value/length\n";
  out << std::left << std::setw(10) << "length" << std::setw(static_cast<int>(width)) << r.values.front().second
      << "1\n";
  for (std::size_t i = 0; i < r.ratios.size(); ++i) {
    out << std::left << std::setw(10) << r.ratios[i].first << std::setw(static_cast<int>(width))
        << r.values[i + 1].second << r.ratios[i].second << "\n";
  }
  for (const auto& m : r.measures) {
    out << "\n" << m.kind << " measure\n";
    for (const auto& pm : m.point_masses) out << "  delta " << pm.vertex << "  " << pm.mass << "\n";
    for (const auto& ed : m.edge_densities) {
      out << "  edge " << ed.u << "-" << ed.v << " (length " << ed.length << ")  " << ed.density << " dx\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const FormattedReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return emit_json(report);
    case ReportFormat::csv:
      return emit_csv(report);
    case ReportFormat::table:
      return emit_table(report);
  }
  return {};
}

FormattedReport run_compute(const PMGraph& graph, const RunOptions& options, std::string label) {
  switch (options.mode) {
    case ScalarMode::exact:
      return format_result(compute_all<Rational>(graph, options.compute), options.digits, std::move(label));
    case ScalarMode::machine:
      return format_result(compute_all<double>(graph, options.compute), options.digits, std::move(label));
    case ScalarMode::bigfloat: {
      PrecisionScope scope(static_cast<unsigned>(options.digits));
      return format_result(compute_all<BigFloat>(graph, options.compute), options.digits, std::move(label));
    }
  }
  throw Error(ErrorCode::BadParameter, "unknown scalar mode");
}

}  // namespace pmg
