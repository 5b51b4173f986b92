#pragma once

#include <optional>
#include <string>

#include "hmoment/matrix.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

/// First place where two sides of an exact identity disagree. Scalar identities
/// leave row and col empty.
struct Mismatch {
  std::string quantity;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  Rational expected;
  Rational actual;
};

/// Outcome of an exact identity check. Checks report rather than throw so that
/// a verification grid can continue past a failure.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<Mismatch> mismatch;

  explicit operator bool() const noexcept { return passed; }
};

/// Compares two exact matrices and records the first differing entry.
/// A shape mismatch is reported with an empty row/col.
CheckReport compare_exact(std::string name, std::string quantity, const Matrix<Rational>& expected,
                          const Matrix<Rational>& actual);

CheckReport compare_exact(std::string name, std::string quantity, const Rational& expected,
                          const Rational& actual);

/// Folds the second report into the first: the first failure wins.
CheckReport& merge_into(CheckReport& into, const CheckReport& other);

}  // namespace hmoment
