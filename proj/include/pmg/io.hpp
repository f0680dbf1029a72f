#pragma once

// Graph documents (JSON) and invariant reports (JSON, CSV, aligned table).
//
// Graph document:
//   {"vertices": [{"id": "p", "q": 0}, ...],
//    "edges":    [{"u": "p", "v": "q", "length": "1/6"}, ...]}
// q defaults to 0. A length is a string holding "p/q", an integer or a
// decimal literal, or a JSON number; it is read as the exact rational the
// literal denotes.

#include "pmg/graph.hpp"
#include "pmg/invariants.hpp"
#include "pmg/scalar.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pmg {

/// Throws ParseError for malformed JSON or schema violations and
/// ValidationError for duplicate ids or unknown endpoints.
PMGraph parse_graph(std::string_view text);

std::string write_graph(const PMGraph& graph);

enum class ReportFormat { json, csv, table };

ReportFormat parse_report_format(std::string_view text);

struct FormattedPointMass {
  std::string vertex;
  std::string mass;
};

struct FormattedEdgeDensity {
  std::size_t edge = 0;
  std::string u;
  std::string v;
  std::string length;
  std::string density;
};

struct FormattedMeasure {
  std::string kind;
  std::vector<FormattedPointMass> point_masses;
  std::vector<FormattedEdgeDensity> edge_densities;
};

/// Mode-independent rendering of one computation: every number is already
/// a string, so all output formats carry the same payload.
struct FormattedReport {
  std::string label;
  std::string mode;
  long g = 0;
  long gbar = 0;
  /// length, tau, theta, phi, lambda, epsilon, z in that order.
  std::vector<std::pair<std::string, std::string>> values;
  /// Each of tau..z divided by the total length.
  std::vector<std::pair<std::string, std::string>> ratios;
  std::vector<FormattedMeasure> measures;
  std::vector<std::string> warnings;

  const std::string& value(std::string_view name) const;
  const std::string& ratio(std::string_view name) const;
};

template <class S>
FormattedReport format_result(const ComputeResult<S>& result, int digits, std::string label = {});

std::string emit_report(const FormattedReport& report, ReportFormat format);

/// Fixed CSV header used for the invariant row.
std::string_view csv_header();

struct RunOptions {
  ScalarMode mode = ScalarMode::exact;
  /// Significant figures in float output; also the bigfloat working precision.
  int digits = 10;
  ComputeOptions compute;
};

/// compute_all in the requested scalar mode, rendered for output.
FormattedReport run_compute(const PMGraph& graph, const RunOptions& options, std::string label = {});

}  // namespace pmg
