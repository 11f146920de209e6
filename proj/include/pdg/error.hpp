#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdg {

enum class ErrorKind {
  InvalidInput,
  NotALattice,
  MalformedLattice,
  FaceNotFound,
  CyclicInput,
  NotAcyclicUSO,
  NotSimpleVertex,
  NotUniqueSink,
  BadSplit,
  NotDimensionFour,
  BoundsViolation,
  InvalidPairSequence,
  CyclicOrientation,
  LimitExceeded,
  InfeasiblePoint,
  DimensionMismatch,
  NotGeneric,
  NotInterior,
  NotAdjacentFacets,
  DegenerateAfterRetries,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pdg
