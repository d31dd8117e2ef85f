#pragma once

#include <stdexcept>
#include <string>

namespace arbopack {

enum class Errc {
  DuplicateEdgeId,
  HeadInTail,
  EmptyTail,
  HyperedgeTooSmall,
  UnknownVertex,
  UnknownEdge,
  NegativeBound,
  OverlappingClasses,
  TooLarge,
  GpmConditionViolated,
  GpmMuOutOfRange,
  Gpc1Violated,
  Gpc2Violated,
  OracleInconsistent,
  DecompositionFailed,
  BundleReused,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code);

/// Library error. `subject` names the offending element (edge id, vertex
/// name, or class index rendered as text) when one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string subject = {});

  Errc code() const { return code_; }
  const std::string& subject() const { return subject_; }

 private:
  Errc code_;
  std::string subject_;
};

[[noreturn]] void raise(Errc code, const std::string& message, std::string subject = {});

}  // namespace arbopack
