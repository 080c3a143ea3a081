#include "sslat/error.hpp"

namespace sslat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IntervalOutOfRange: return "IntervalOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::CellOutOfRange: return "CellOutOfRange";
    case ErrorCode::NotAPrimeInterval: return "NotAPrimeInterval";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotSlimSemimodular: return "NotSlimSemimodular";
    case ErrorCode::TrajectoryAmbiguous: return "TrajectoryAmbiguous";
    case ErrorCode::UniquenessViolated: return "UniquenessViolated";
    case ErrorCode::SourceCellMissing: return "SourceCellMissing";
    case ErrorCode::SourceCellDuplicated: return "SourceCellDuplicated";
    case ErrorCode::ExtractorDisagreement: return "ExtractorDisagreement";
    case ErrorCode::DuplicatePrime: return "DuplicatePrime";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
  }
  return "Unknown";
}

}  // namespace sslat
