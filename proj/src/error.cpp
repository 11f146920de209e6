#include "pdg/error.hpp"

namespace pdg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::MalformedLattice: return "MalformedLattice";
    case ErrorKind::FaceNotFound: return "FaceNotFound";
    case ErrorKind::CyclicInput: return "CyclicInput";
    case ErrorKind::NotAcyclicUSO: return "NotAcyclicUSO";
    case ErrorKind::NotSimpleVertex: return "NotSimpleVertex";
    case ErrorKind::NotUniqueSink: return "NotUniqueSink";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::NotDimensionFour: return "NotDimensionFour";
    case ErrorKind::BoundsViolation: return "BoundsViolation";
    case ErrorKind::InvalidPairSequence: return "InvalidPairSequence";
    case ErrorKind::CyclicOrientation: return "CyclicOrientation";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NotAdjacentFacets: return "NotAdjacentFacets";
    case ErrorKind::DegenerateAfterRetries: return "DegenerateAfterRetries";
  }
  return "Unknown";
}

}  // namespace pdg
