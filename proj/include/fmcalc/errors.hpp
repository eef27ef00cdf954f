#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmcalc {

enum class ErrorKind {
  PresentationMismatch,
  NotNilpotent,
  NotUnitOne,
  InvalidPresentation,
  UnknownCatalogEntry,
  InconsistentCustomLattice,
  WrongKind,
  NonPositiveRank,
  NegativeRank,
  NotSUn,
  DimensionMismatch,
  ZeroRank,
  ZeroSupportDegree,
  EmptyRange,
  BadFraction,
  SyntaxError,
  UnknownKey,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every recoverable failure in the library.
/// The kind is what callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fmcalc
