#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace topocat {

// Every failure the library reports, tagged so callers (and the CLI) can
// branch on the exact condition instead of parsing message text.
enum class ErrorKind {
  MissingEmptySet,
  MissingFullSet,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  MaskOutOfRange,
  BadLabels,
  ArityMismatch,
  UnsupportedSize,
  NotClosed,
  SpaceMismatch,
  MalformedTable,
  MalformedFunction,
  BijectionMissing,
  NotAdjointInput,
  TheoremViolation,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  Error(ErrorKind kind, const std::string& message, std::uint64_t a, std::uint64_t b)
      : Error(kind, message) {
    pair_ = {a, b};
  }

  ErrorKind kind() const noexcept { return kind_; }

  // Offending pair of subset masks, when the condition names one
  // (union/intersection violations, missing hom bijections, ...).
  const std::optional<std::pair<std::uint64_t, std::uint64_t>>& detail_pair() const noexcept {
    return pair_;
  }

 private:
  ErrorKind kind_;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair_;
};

}  // namespace topocat
