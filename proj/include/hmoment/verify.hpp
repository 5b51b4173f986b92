#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hmoment/check.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

struct VerifyCheck {
  std::string name;
  std::size_t m = 0;
  Rational sigma2;
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0.0;
};

/// Ordered by check name, then M, then sigma^2.
struct VerifyReport {
  std::vector<VerifyCheck> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t failures() const;
};

struct VerifyGrid {
  std::size_t m_max = 12;
  std::vector<Rational> sigma2{Rational(1), Rational(4), Rational(1, 4), Rational(9, 49)};
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs every exact identity over M = 1..m_max and each sigma^2: the square-root-free
/// congruence, both Hermite congruences, the determinant products, the Gaussian recurrence and scaling split
/// per (M, sigma^2); the commuting property and Hermite orthogonality per M;
/// and the uniform-distribution recurrence as a negative control for M >= 2.
VerifyReport run_verify(const VerifyGrid& grid);

/// Key/value config ("m_max = 12", "sigma2 = 1, 4, 1/4", "threads = 4"),
/// '#' comments. Keys absent from the text keep the defaults in `base`.
VerifyGrid parse_verify_config(const std::string& text, VerifyGrid base = {});

}  // namespace hmoment
