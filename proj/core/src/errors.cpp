#include "cuspbif/errors.hpp"

namespace cuspbif {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionInfinite: return "DimensionInfinite";
    case ErrorKind::NotAlgebraicallyIsolated: return "NotAlgebraicallyIsolated";
    case ErrorKind::DegenerateJacobianClass: return "DegenerateJacobianClass";
    case ErrorKind::NoGenericCombinationFound: return "NoGenericCombinationFound";
    case ErrorKind::XiSearchExceededBound: return "XiSearchExceededBound";
    case ErrorKind::NegativeBranchCount: return "NegativeBranchCount";
    case ErrorKind::OddBPrime: return "OddBPrime";
    case ErrorKind::OriginNotMapped: return "OriginNotMapped";
    case ErrorKind::JNotVanishing: return "JNotVanishing";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::ParityViolation: return "ParityViolation";
  }
  return "Unknown";
}

bool is_hypothesis_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionInfinite:
    case ErrorKind::NotAlgebraicallyIsolated:
    case ErrorKind::DegenerateJacobianClass:
    case ErrorKind::NoGenericCombinationFound:
    case ErrorKind::XiSearchExceededBound:
    case ErrorKind::OriginNotMapped:
    case ErrorKind::JNotVanishing:
    case ErrorKind::HypothesisFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace cuspbif
