#pragma once

#include <cstddef>

#include "hmoment/check.hpp"
#include "hmoment/matrix.hpp"
#include "hmoment/moments.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

using RationalMatrix = Matrix<Rational>;
using RationalDiagonal = Diagonal<Rational>;

/// M x M moment matrix with entries(i, j) = mu[i + j + shift].
/// shift 0 gives A = E(z^T z), shift 1 gives B = E(s^2 z^T z), z = (1, s^2, ...).
class HankelMatrix {
 public:
  HankelMatrix(const MomentSequence& moments, std::size_t m, unsigned shift);

  [[nodiscard]] std::size_t order() const noexcept { return entries_.rows(); }
  [[nodiscard]] unsigned shift() const noexcept { return shift_; }
  [[nodiscard]] const RationalMatrix& entries() const noexcept { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  RationalMatrix entries_;
  unsigned shift_;
};

HankelMatrix build_A(const MomentSequence& moments);
HankelMatrix build_A(const MomentSequence& moments, std::size_t m);
HankelMatrix build_B(const MomentSequence& moments);
HankelMatrix build_B(const MomentSequence& moments, std::size_t m);

/// D = diag(1, 3, ..., 2M-1): the derivative weights of f(s) = s a z^T.
RationalDiagonal order_diagonal(std::size_t m);

/// D_sigma = diag(1, sigma^2, sigma^4, ...).
RationalDiagonal sigma_diagonal(std::size_t m, const Rational& sigma2);

/// Exact determinant by fraction-free (Bareiss) elimination over the integers
/// after clearing row denominators.
Rational determinant(const RationalMatrix& h);
inline Rational determinant(const HankelMatrix& h) { return determinant(h.entries()); }

/// A = D_sigma A0 D_sigma and B = sigma^2 D_sigma B0 D_sigma, with A0, B0 the
/// unit-variance Gaussian moment matrices.
CheckReport check_scaling_split(const HankelMatrix& a, const HankelMatrix& b, const Rational& sigma2);

/// AD + DA = A + sigma^-2 B, and the equivalent
/// sigma^-2 B = DAD - (D - I) A (D - I). Holds only for Gaussian moments.
CheckReport check_recurrence(const HankelMatrix& a, const HankelMatrix& b, const Rational& sigma2);

/// Closed-form determinant products of the Gaussian moment matrices against
/// the elimination oracle:
///   det B = sigma^{2M^2} prod (2k+1)!,  det A = sigma^{2M(M-1)} prod (2k)!,
///   det B / det A = sigma^{2M} det D.
CheckReport check_determinant_products(std::size_t m, const Rational& sigma2);

}  // namespace hmoment
