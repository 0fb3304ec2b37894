#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monospec {

enum class ErrorKind {
  Dimension,
  NegativeEntry,
  RowSum,
  MonotoneViolation,
  WitnessInvalid,
  Convergence,
  PerronFailure,
  StochasticityFailure,
  UnsupportedN,
  Domain,
  AlphaOutOfRange,
  OutOfRegion,
  InternalBoundaryMismatch,
  NotOnCurve,
  InvalidVector,
  UnknownExperiment,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Row k+1 fails to dominate row k at column r (both 1-based).
class MonotoneViolation : public Error {
 public:
  MonotoneViolation(std::size_t k, std::size_t r, double deficit);

  std::size_t row() const noexcept { return k_; }
  std::size_t column() const noexcept { return r_; }
  double deficit() const noexcept { return deficit_; }

 private:
  std::size_t k_;
  std::size_t r_;
  double deficit_;
};

}  // namespace monospec
