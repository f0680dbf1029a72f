#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmg {

enum class ErrorCode {
  DisconnectedGraph,
  NonpositiveEdgeLength,
  NonEffectiveCanonicalDivisor,
  DuplicateVertexId,
  NegativePolarization,
  EmptyGraph,
  UnknownVertex,
  UnknownEdge,
  InvalidGenus,
  GenusMismatch,
  NotAdequate,
  NonzeroPolarization,
  NotRegular,
  SingularMatrix,
  PrecisionLoss,
  BadParameter,
  BadParameterCount,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One violated graph constraint. `subject` names the offending vertex id or
/// edge ("edge 3: u-v").
struct Violation {
  ErrorCode code;
  std::string subject;
  std::string message;
};

/// Raised for graphs that break a structural or polarization constraint.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  ValidationError(ErrorCode code, std::string subject, std::string message);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Singular input to an inversion, or float residuals beyond tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::string field);
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace pmg
