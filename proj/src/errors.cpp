#include "pmg/errors.hpp"

namespace pmg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NonpositiveEdgeLength: return "NonpositiveEdgeLength";
    case ErrorCode::NonEffectiveCanonicalDivisor: return "NonEffectiveCanonicalDivisor";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::NegativePolarization: return "NegativePolarization";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::NotAdequate: return "NotAdequate";
    case ErrorCode::NonzeroPolarization: return "NonzeroPolarization";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadParameterCount: return "BadParameterCount";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  if (violations.empty()) return "invalid graph";
  std::string out = std::string(to_string(violations.front().code)) + ": " + violations.front().message;
  if (violations.size() > 1) out += " (+" + std::to_string(violations.size() - 1) + " more)";
  return out;
}

ErrorCode first_code(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorCode::DisconnectedGraph : violations.front().code;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(first_code(violations), summarize(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(ErrorCode code, std::string subject, std::string message)
    : ValidationError(std::vector<Violation>{{code, std::move(subject), std::move(message)}}) {}

ParseError::ParseError(std::string message, std::size_t line, std::string field)
    : Error(ErrorCode::ParseError,
            (line ? "line " + std::to_string(line) + ": " : std::string()) +
                (field.empty() ? std::string() : field + ": ") + message),
      line_(line),
      field_(std::move(field)) {}

}  // namespace pmg
