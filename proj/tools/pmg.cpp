// pmg: invariants of polarized metrized graphs from the command line.

#include <CLI11.hpp>

#include "pmg/errors.hpp"
#include "pmg/families.hpp"
#include "pmg/graph.hpp"
#include "pmg/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kParse = 3, kNumeric = 4 };

int exit_code(pmg::ErrorCode code) {
  using pmg::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::SingularMatrix:
    case ErrorCode::PrecisionLoss:
      return kNumeric;
    case ErrorCode::BadParameter:
    case ErrorCode::BadParameterCount:
      return kUsage;
    default:
      return kValidation;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pmg::Error(pmg::ErrorCode::BadParameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<pmg::Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<pmg::Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(pmg::parse_rational(s));
  return out;
}

struct ComputeFlags {
  std::string mode = "exact";
  int digits = 10;
  std::string format = "json";
  bool measures = false;
  std::string loop_strategy = "analytic";
  std::string inverse = "minus-j";
  double tolerance = -1.0;
  bool strict = false;
  std::string output;
};

void add_compute_flags(CLI::App* app, ComputeFlags& f) {
  app->add_option("--mode", f.mode, "exact | bigfloat | machine")
      ->check(CLI::IsMember({"exact", "bigfloat", "machine"}))
      ->capture_default_str();
  app->add_option("--digits", f.digits, "significant figures (and bigfloat precision)")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  app->add_option("--format", f.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app->add_flag("--measures", f.measures, "include canonical and admissible measures");
  app->add_option("--loop-strategy", f.loop_strategy, "analytic | subdivide")
      ->check(CLI::IsMember({"analytic", "subdivide"}))
      ->capture_default_str();
  app->add_option("--inverse", f.inverse, "minus-j | plus-j")
      ->check(CLI::IsMember({"minus-j", "plus-j"}))
      ->capture_default_str();
  app->add_option("--tolerance", f.tolerance, "relative residual tolerance for float modes");
  app->add_flag("--strict", f.strict, "treat precision warnings as errors");
  app->add_option("-o,--output", f.output, "write the report to a file instead of stdout");
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pmg::Error(pmg::ErrorCode::BadParameter, "cannot write '" + path + "'");
  out << text;
}

void run_report(const pmg::PMGraph& graph, const ComputeFlags& f, const std::string& label) {
  pmg::RunOptions options;
  options.mode = pmg::parse_mode(f.mode);
  options.digits = f.digits;
  if (options.mode == pmg::ScalarMode::bigfloat && options.digits < static_cast<int>(pmg::kMinBigFloatDigits)) {
    throw pmg::Error(pmg::ErrorCode::BadParameter,
                     "bigfloat needs --digits >= " + std::to_string(pmg::kMinBigFloatDigits));
  }
  options.compute.loop_strategy = pmg::parse_loop_strategy(f.loop_strategy);
  options.compute.inverse = pmg::parse_inverse_variant(f.inverse);
  options.compute.tolerance = f.tolerance;
  options.compute.measures = f.measures;
  options.compute.strict = f.strict;
  pmg::FormattedReport report = pmg::run_compute(graph, options, label);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  write_out(f.output, pmg::emit_report(report, pmg::parse_report_format(f.format)));
}

std::string check_report(const pmg::PMGraph& graph) {
  std::ostringstream out;
  pmg::ValidationOutcome outcome = pmg::validate(graph, true);
  out << "vertices " << graph.vertex_count() << "\n";
  out << "edges " << graph.edge_count() << "\n";
  if (outcome.ok()) {
    pmg::GenusData gd = pmg::genus(graph);
    out << "length " << pmg::to_string(pmg::total_length(graph)) << "\n";
    out << "g " << gd.g << "\n";
    out << "gbar " << gd.gbar << "\n";
    out << "degK " << gd.deg_k << "\n";
    out << "valid\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of polarized metrized graphs"};
  app.require_subcommand(1);

  ComputeFlags compute_flags;
  std::string input;
  auto* compute = app.add_subcommand("compute", "compute invariants of a graph document");
  compute->add_option("-i,--input", input, "graph document (JSON), '-' for stdin")->required();
  add_compute_flags(compute, compute_flags);

  std::string check_input;
  auto* check = app.add_subcommand("check", "validate a graph document and report its genus");
  check->add_option("-i,--input", check_input, "graph document (JSON), '-' for stdin")->required();

  auto* family = app.add_subcommand("family", "compute invariants of a built-in graph family");
  family->require_subcommand(1);
  ComputeFlags family_flags;
  bool emit_graph = false;

  long ladder_n = 5;
  std::string ladder_a = "1", ladder_b = "1";
  auto* ladder = family->add_subcommand("ladder", "ladder L_n(a, b)");
  ladder->add_option("--n", ladder_n, "number of rungs")->capture_default_str();
  ladder->add_option("--a", ladder_a, "rail length")->capture_default_str();
  ladder->add_option("--b", ladder_b, "rung length")->capture_default_str();

  std::vector<std::string> k4_lengths;
  long k4_q = 0;
  auto* complete4 = family->add_subcommand("complete4", "complete graph on 4 vertices");
  complete4->add_option("--lengths", k4_lengths, "one length, or six in order 01 02 03 12 13 23")
      ->delimiter(',');
  complete4->add_option("--q", k4_q, "polarization at every vertex")->capture_default_str();

  std::vector<std::string> loops{"1"};
  long bouquet_q = 0;
  auto* bouquet = family->add_subcommand("bouquet", "one vertex with self-loops");
  bouquet->add_option("--loops", loops, "loop lengths")->delimiter(',');
  bouquet->add_option("--q", bouquet_q, "polarization at the vertex")->capture_default_str();

  std::string circle_length = "1";
  auto* circle = family->add_subcommand("circle", "a single self-loop");
  circle->add_option("--length", circle_length)->capture_default_str();

  std::string e3[5] = {"1", "1", "1", "1", "1"};
  auto* example3 = family->add_subcommand("example3", "self-loop, parallel edges and pendant edges");
  const char* e3_names[5] = {"--a", "--b", "--c", "--d", "--e"};
  for (int i = 0; i < 5; ++i) example3->add_option(e3_names[i], e3[i])->capture_default_str();

  for (auto* sub : {ladder, complete4, bouquet, circle, example3}) {
    add_compute_flags(sub, family_flags);
    sub->add_flag("--emit-graph", emit_graph, "print the graph document instead of computing");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      pmg::PMGraph graph = pmg::parse_graph(read_input(input));
      run_report(graph, compute_flags, input == "-" ? "" : input);
      return kOk;
    }
    if (*check) {
      pmg::PMGraph graph = pmg::parse_graph(read_input(check_input));
      std::cout << check_report(graph);
      pmg::require_valid(graph, true);
      return kOk;
    }

    pmg::PMGraph graph;
    std::string label;
    if (*ladder) {
      graph = pmg::families::ladder(ladder_n, pmg::parse_rational(ladder_a), pmg::parse_rational(ladder_b));
      label = "ladder n=" + std::to_string(ladder_n) + " a=" + ladder_a + " b=" + ladder_b;
    } else if (*complete4) {
      std::vector<pmg::Rational> lengths = parse_rational_list(k4_lengths);
      if (lengths.empty()) lengths.assign(6, pmg::Rational(1, 6));
      if (lengths.size() == 1) lengths.assign(6, lengths.front());
      graph = pmg::families::complete_graph(4, lengths, std::vector<long>(4, k4_q));
      label = "complete4 q=" + std::to_string(k4_q);
    } else if (*bouquet) {
      graph = pmg::families::bouquet(parse_rational_list(loops), bouquet_q);
      label = "bouquet loops=" + std::to_string(loops.size()) + " q=" + std::to_string(bouquet_q);
    } else if (*circle) {
      graph = pmg::families::circle(pmg::parse_rational(circle_length));
      label = "circle length=" + circle_length;
    } else {
      std::vector<pmg::Rational> p = parse_rational_list({e3[0], e3[1], e3[2], e3[3], e3[4]});
      graph = pmg::families::example3(p[0], p[1], p[2], p[3], p[4]);
      label = "example3";
    }
    if (emit_graph) {
      write_out(family_flags.output, pmg::write_graph(graph));
      return kOk;
    }
    run_report(graph, family_flags, label);
    return kOk;
  } catch (const pmg::ValidationError& e) {
    std::cerr << "validation failed:\n";
    for (const auto& v : e.violations()) {
      std::cerr << "  " << pmg::to_string(v.code) << " " << v.subject << ": " << v.message << "\n";
    }
    return kValidation;
  } catch (const pmg::Error& e) {
    std::cerr << "error (" << pmg::to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  }
}
