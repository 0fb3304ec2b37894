#include "monospec/error.hpp"

#include <sstream>

namespace monospec {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::RowSum: return "RowSumError";
    case ErrorKind::MonotoneViolation: return "MonotoneViolation";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::Convergence: return "ConvergenceError";
    case ErrorKind::PerronFailure: return "PerronFailure";
    case ErrorKind::StochasticityFailure: return "StochasticityFailure";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::OutOfRegion: return "OutOfRegion";
    case ErrorKind::InternalBoundaryMismatch: return "InternalBoundaryMismatch";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::UnknownExperiment: return "UnknownExperiment";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

namespace {
std::string violation_message(std::size_t k, std::size_t r, double deficit) {
  std::ostringstream os;
  os.precision(17);
  os << "row " << k + 1 << " does not dominate row " << k << " at column " << r
     << " (deficit " << deficit << ")";
  return os.str();
}
}  // namespace

MonotoneViolation::MonotoneViolation(std::size_t k, std::size_t r, double deficit)
    : Error(ErrorKind::MonotoneViolation, violation_message(k, r, deficit)),
      k_(k),
      r_(r),
      deficit_(deficit) {}

}  // namespace monospec
