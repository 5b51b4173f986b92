#include "hmoment/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hmoment/errors.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/moments.hpp"

namespace hmoment {

RationalMatrix LdlFactorization::reconstruct() const {
  return (lower * RationalDiagonal{pivots}) * lower.transpose();
}

LdlFactorization ldl_decompose(const RationalMatrix& h, PivotPolicy policy) {
  if (!h.square()) throw DimensionError("LDL needs a square matrix");
  if (!is_symmetric(h)) throw DimensionError("LDL needs a symmetric matrix");
  const std::size_t n = h.rows();
  LdlFactorization out{RationalMatrix::identity(n), std::vector<Rational>(n), 0};
  RationalMatrix& l = out.lower;

  for (std::size_t j = 0; j < n; ++j) {
    Rational pivot = h(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k) * out.pivots[k];
    out.pivots[j] = pivot;

    const int sign = sgn(pivot);
    if (sign < 0 || (sign == 0 && policy == PivotPolicy::strict))
      throw NotPositiveDefinite(j, "pivot " + std::to_string(j) + " is " + to_string(pivot) +
                                       "; matrix is not positive definite");

    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = h(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * out.pivots[k];
      if (sign == 0) {
        // A PSD matrix with a zero pivot has a zero Schur column below it.
        if (v != 0)
          throw NotPositiveDefinite(j, "zero pivot " + std::to_string(j) +
                                           " with nonzero column; matrix is not positive semidefinite");
        l(i, j) = 0;
      } else {
        l(i, j) = v / pivot;
      }
    }
    if (sign > 0) ++out.rank;
  }
  return out;
}

RationalMatrix unit_lower_inverse(const RationalMatrix& t) {
  if (!t.square()) throw DimensionError("triangular inverse needs a square matrix");
  const std::size_t n = t.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (t(i, i) != 1) throw DimensionError("matrix is not unit lower triangular");
    for (std::size_t j = i + 1; j < n; ++j)
      if (t(i, j) != 0) throw DimensionError("matrix is not unit lower triangular");
  }
  RationalMatrix x = RationalMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t k = j; k < i; ++k) acc += t(i, k) * x(k, j);
      x(i, j) = -acc;
    }
  return x;
}

RationalDiagonal factorial_diagonal_even(std::size_t m) {
  RationalDiagonal d;
  for (std::size_t k = 0; k < m; ++k) d.diag.emplace_back(factorial(2 * k));
  return d;
}

RationalDiagonal factorial_diagonal_odd(std::size_t m) {
  RationalDiagonal d;
  for (std::size_t k = 0; k < m; ++k) d.diag.emplace_back(factorial(2 * k + 1));
  return d;
}

ClosedFormFactors closed_form_factors(std::size_t m, const Rational& sigma2) {
  const auto d_sigma = sigma_diagonal(m, sigma2);
  const auto d_sigma_inv = d_sigma.inverse();

  ClosedFormFactors out;
  out.b.lower = d_sigma * (unit_lower_inverse(build_L_b(m).rows) * d_sigma_inv);
  out.a.lower = d_sigma * (unit_lower_inverse(build_L_a(m).rows) * d_sigma_inv);
  for (std::size_t k = 0; k < m; ++k) {
    out.b.pivots.push_back(pow(sigma2, 2 * k + 1) * Rational(factorial(2 * k + 1)));
    out.a.pivots.push_back(pow(sigma2, 2 * k) * Rational(factorial(2 * k)));
  }
  out.a.rank = out.b.rank = m;
  return out;
}

CheckReport check_lemma1(std::size_t m, const Rational& sigma2) {
  const auto moments = gaussian_even_moments(m, sigma2);
  const RationalMatrix a = build_A(moments).entries();
  const RationalMatrix b = build_B(moments).entries();
  const auto d_sigma = sigma_diagonal(m, sigma2);
  const auto d_sigma_inv = d_sigma.inverse();
  const RationalMatrix l_b = build_L_b(m).rows;
  const RationalMatrix l_a = build_L_a(m).rows;
  const auto d_a = factorial_diagonal_even(m);
  const auto d_b = factorial_diagonal_odd(m);

  const RationalMatrix b_congruence = l_b * (d_sigma_inv * (b * d_sigma_inv)) * l_b.transpose();
  const RationalMatrix a_congruence = l_a * (d_sigma_inv * (a * d_sigma_inv)) * l_a.transpose();

  CheckReport report =
      compare_exact("lemma1", "L_b Ds^-1 B Ds^-1 L_b^T vs sigma^2 D_b", sigma2 * d_b.dense(), b_congruence);
  merge_into(report, compare_exact("lemma1", "L_a Ds^-1 A Ds^-1 L_a^T vs D_a", d_a.dense(), a_congruence));
  merge_into(report, compare_exact("lemma1", "D_b vs D D_a", (order_diagonal(m) * d_a).dense(), d_b.dense()));

  // Same identities with the sigma scaling folded into the triangle.
  const RationalMatrix t_b = d_sigma * (l_b * d_sigma_inv);
  const RationalMatrix t_a = d_sigma * (l_a * d_sigma_inv);
  RationalDiagonal b_pivots;
  RationalDiagonal a_pivots;
  for (std::size_t k = 0; k < m; ++k) {
    b_pivots.diag.push_back(pow(sigma2, 2 * k + 1) * d_b[k]);
    a_pivots.diag.push_back(pow(sigma2, 2 * k) * d_a[k]);
  }
  merge_into(report, compare_exact("lemma1", "T_b B T_b^T vs diag(sigma^{4k+2} (2k+1)!)", b_pivots.dense(),
                                   t_b * b * t_b.transpose()));
  merge_into(report, compare_exact("lemma1", "T_a A T_a^T vs diag(sigma^{4k} (2k)!)", a_pivots.dense(),
                                   t_a * a * t_a.transpose()));
  return report;
}

CheckReport verify_theorem1(std::size_t m, const Rational& sigma2) {
  const auto moments = gaussian_even_moments(m, sigma2);
  const RationalMatrix a = build_A(moments).entries();
  const auto d = order_diagonal(m);
  const auto d_sigma_inv = sigma_diagonal(m, sigma2).inverse();
  const RationalMatrix l_b = build_L_b(m).rows;

  const RationalMatrix inner = d_sigma_inv * (d * (a * d) * d_sigma_inv);
  const RationalMatrix lhs = l_b * inner * l_b.transpose();
  const RationalMatrix rhs = (d * factorial_diagonal_odd(m)).dense();
  return compare_exact("theorem1", "L_b Ds^-1 D A D Ds^-1 L_b^T vs D D_b", rhs, lhs);
}

Matrix<double> to_double(const RationalMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

FloatCholesky float_cholesky(const Matrix<double>& h) {
  if (!h.square()) throw DimensionError("Cholesky needs a square matrix");
  const std::size_t n = h.rows();
  FloatCholesky out{Matrix<double>(n, n, 0.0), 1.0, false};
  Matrix<double>& l = out.lower;
  double max_pivot = 0.0;
  double min_pivot = HUGE_VAL;

  for (std::size_t j = 0; j < n; ++j) {
    double pivot = h(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > 0.0)) {
      std::ostringstream msg;
      msg << "non-positive pivot " << pivot << " at index " << j
          << " in floating Cholesky; use the exact LDL path";
      throw ConditioningError(HUGE_VAL, msg.str());
    }
    max_pivot = std::max(max_pivot, pivot);
    min_pivot = std::min(min_pivot, pivot);
    const double diag = std::sqrt(pivot);
    l(j, j) = diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = h(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / diag;
    }
  }
  out.pivot_ratio = max_pivot / min_pivot;
  out.ill_conditioned = out.pivot_ratio > kPivotRatioWarning;
  if (out.pivot_ratio > kPivotRatioLimit) {
    std::ostringstream msg;
    msg << "pivot ratio " << out.pivot_ratio << " exceeds the double-precision limit " << kPivotRatioLimit
        << "; use the exact LDL path";
    throw ConditioningError(out.pivot_ratio, msg.str());
  }
  return out;
}

}  // namespace hmoment
