#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspbif {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  DimensionInfinite,
  NotAlgebraicallyIsolated,
  DegenerateJacobianClass,
  NoGenericCombinationFound,
  XiSearchExceededBound,
  NegativeBranchCount,
  OddBPrime,
  OriginNotMapped,
  JNotVanishing,
  HypothesisFailed,
  InconsistentSystem,
  ParityViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors meaning the input germ violates a hypothesis of the method,
/// as opposed to malformed input or an internal inconsistency.
bool is_hypothesis_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cuspbif
