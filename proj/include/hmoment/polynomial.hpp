#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hmoment/rational.hpp"

namespace hmoment {

/// Odd polynomial f(s) = s * sum_k a_k s^{2k}, k = 0..M-1, of order N = 2M-1.
/// Its derivative f'(s) = sum_k (2k+1) a_k s^{2k} is even.
struct OddPolynomial {
  std::vector<double> a;

  [[nodiscard]] std::size_t m() const noexcept { return a.size(); }
  [[nodiscard]] std::size_t order() const noexcept { return a.empty() ? 0 : 2 * a.size() - 1; }
};

/// Exact coefficient vector for the same basis.
using ExactOddPolynomial = std::vector<Rational>;

ExactOddPolynomial to_exact(const OddPolynomial& poly);

}  // namespace hmoment
