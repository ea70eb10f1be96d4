#include "topocat/errors.hpp"

namespace topocat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingEmptySet: return "MissingEmptySet";
    case ErrorKind::MissingFullSet: return "MissingFullSet";
    case ErrorKind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::MaskOutOfRange: return "MaskOutOfRange";
    case ErrorKind::BadLabels: return "BadLabels";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::MalformedFunction: return "MalformedFunction";
    case ErrorKind::BijectionMissing: return "BijectionMissing";
    case ErrorKind::NotAdjointInput: return "NotAdjointInput";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace topocat
