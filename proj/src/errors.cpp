#include "arbopack/errors.hpp"

#include <utility>

namespace arbopack {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateEdgeId: return "DuplicateEdgeId";
    case Errc::HeadInTail: return "HeadInTail";
    case Errc::EmptyTail: return "EmptyTail";
    case Errc::HyperedgeTooSmall: return "HyperedgeTooSmall";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::NegativeBound: return "NegativeBound";
    case Errc::OverlappingClasses: return "OverlappingClasses";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GpmConditionViolated: return "GpmConditionViolated";
    case Errc::GpmMuOutOfRange: return "GpmMuOutOfRange";
    case Errc::Gpc1Violated: return "Gpc1Violated";
    case Errc::Gpc2Violated: return "Gpc2Violated";
    case Errc::OracleInconsistent: return "OracleInconsistent";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::BundleReused: return "BundleReused";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message, std::string subject)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      subject_(std::move(subject)) {}

void raise(Errc code, const std::string& message, std::string subject) {
  throw Error(code, message, std::move(subject));
}

}  // namespace arbopack
