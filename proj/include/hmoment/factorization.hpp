#pragma once

#include <cstddef>
#include <vector>

#include "hmoment/check.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/matrix.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

/// Square-root-free Cholesky H = lower * diag(pivots) * lower^T.
struct LdlFactorization {
  RationalMatrix lower;
  std::vector<Rational> pivots;
  std::size_t rank = 0;

  [[nodiscard]] RationalMatrix reconstruct() const;
  friend bool operator==(const LdlFactorization&, const LdlFactorization&) = default;
};

enum class PivotPolicy {
  /// Every pivot must be strictly positive.
  strict,
  /// Zero pivots are accepted when the remaining column vanishes (PSD boundary).
  lenient,
};

/// Throws NotPositiveDefinite with the offending pivot index.
LdlFactorization ldl_decompose(const RationalMatrix& h, PivotPolicy policy = PivotPolicy::strict);

struct ClosedFormFactors {
  LdlFactorization a;
  LdlFactorization b;
};

/// Gaussian factors from the Hermite triangles:
///   B: lower = D_sigma L_b^-1 D_sigma^-1, pivots sigma^{4k+2} (2k+1)!
///   A: lower = D_sigma L_a^-1 D_sigma^-1, pivots sigma^{4k} (2k)!
ClosedFormFactors closed_form_factors(std::size_t m, const Rational& sigma2);

/// Inverse of a unit lower-triangular matrix by forward substitution.
RationalMatrix unit_lower_inverse(const RationalMatrix& t);

/// L_b D_sigma^-1 B D_sigma^-1 L_b^T = sigma^2 D_b and
/// L_a D_sigma^-1 A D_sigma^-1 L_a^T = D_a, together with the congruences by the
/// closed-form factor inverses, which give diag(sigma^{4k+2} (2k+1)!) and
/// diag(sigma^{4k} (2k)!).
CheckReport check_lemma1(std::size_t m, const Rational& sigma2);

/// L_b (D_sigma^-1 D A D D_sigma^-1) L_b^T = D D_b, the rational equivalent of
/// L^-1 D A D L^-T = sigma^-2 D.
CheckReport verify_theorem1(std::size_t m, const Rational& sigma2);

/// D_a = diag((2k)!), D_b = diag((2k+1)!).
RationalDiagonal factorial_diagonal_even(std::size_t m);
RationalDiagonal factorial_diagonal_odd(std::size_t m);

// Floating path.

/// Pivot ratio above which the floating Cholesky flags the result.
inline constexpr double kPivotRatioWarning = 1e12;
/// Pivot ratio above which the floating Cholesky refuses: 1 / DBL_EPSILON.
inline constexpr double kPivotRatioLimit = 4503599627370496.0;

struct FloatCholesky {
  Matrix<double> lower;
  /// max pivot / min pivot, pivots being lower(k, k)^2.
  double pivot_ratio = 1.0;
  bool ill_conditioned = false;
};

/// H = L L^T in double precision. Throws ConditioningError on a non-positive
/// pivot or when the pivot ratio exceeds kPivotRatioLimit.
FloatCholesky float_cholesky(const Matrix<double>& h);

Matrix<double> to_double(const RationalMatrix& m);

}  // namespace hmoment
