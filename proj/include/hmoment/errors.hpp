#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmoment {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable machine-readable tag, used as the "kind" field of CLI error JSON.
  [[nodiscard]] virtual const char* kind() const noexcept { return "error"; }
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "invalid-distribution"; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "dimension"; }
};

class EmptyInput : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "empty-input"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "parse"; }
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::size_t pivot_index, const std::string& what)
      : Error(what), pivot_index_(pivot_index) {}
  [[nodiscard]] const char* kind() const noexcept override { return "not-positive-definite"; }
  [[nodiscard]] std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

/// Raised by the floating-point Cholesky when the input is too ill-conditioned
/// for double precision. The exact LDL path is the remedy.
class ConditioningError : public Error {
 public:
  ConditioningError(double pivot_ratio, const std::string& what)
      : Error(what), pivot_ratio_(pivot_ratio) {}
  [[nodiscard]] const char* kind() const noexcept override { return "conditioning"; }
  [[nodiscard]] double pivot_ratio() const noexcept { return pivot_ratio_; }

 private:
  double pivot_ratio_;
};

class DegeneratePolynomial : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "degenerate-polynomial"; }
};

class IterationLimit : public Error {
 public:
  IterationLimit(double residual, const std::string& what) : Error(what), residual_(residual) {}
  [[nodiscard]] const char* kind() const noexcept override { return "iteration-limit"; }
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace hmoment
