#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewline {

enum class ErrorKind {
  RingMismatch,
  InvalidRing,
  DivisionByZero,
  OrderUnavailable,
  ParseScalar,
  DegenerateJoin,
  NotEnumerable,
  InvalidConfiguration,
  DegenerateHexagon,
  HypothesisNotMet,
  InvalidProjection,
  NotOnSource,
  NotOnLine,
  InvalidFrame,
  ConstructionDegenerate,
  SuiteModelMismatch,
  NotPlottable,
  InvalidTrace,
};

// Stable kebab-case name, used in diagnostics and JSON reports.
std::string_view error_kind_name(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace skewline
