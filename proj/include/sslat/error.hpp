#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sslat {

enum class ErrorCode {
  DuplicateValue,
  OutOfRange,
  IntervalOutOfRange,
  LengthMismatch,
  TooLarge,
  ParseError,
  NotALattice,
  NotReduced,
  Cyclic,
  InvalidDiagram,
  CellOutOfRange,
  NotAPrimeInterval,
  HypothesisViolated,
  NotSlimSemimodular,
  TrajectoryAmbiguous,
  UniquenessViolated,
  SourceCellMissing,
  SourceCellDuplicated,
  ExtractorDisagreement,
  DuplicatePrime,
  NotPrime,
  Overflow,
  FactorMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failed precondition; `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sslat
