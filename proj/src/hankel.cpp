#include "hmoment/hankel.hpp"

#include <string>
#include <utility>

#include "hmoment/errors.hpp"

namespace hmoment {

HankelMatrix::HankelMatrix(const MomentSequence& moments, std::size_t m, unsigned shift)
    : shift_(shift) {
  if (m == 0) throw DimensionError("Hankel order must be at least 1");
  const std::size_t needed = 2 * m - 1 + shift;
  if (moments.size() < needed)
    throw DimensionError("order " + std::to_string(m) + " with shift " + std::to_string(shift) +
                         " needs " + std::to_string(needed) + " even moments, got " +
                         std::to_string(moments.size()));
  entries_ = RationalMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) entries_(i, j) = moments[i + j + shift];
}

HankelMatrix build_A(const MomentSequence& moments) { return {moments, moments.order(), 0}; }
HankelMatrix build_A(const MomentSequence& moments, std::size_t m) { return {moments, m, 0}; }
HankelMatrix build_B(const MomentSequence& moments) { return {moments, moments.order(), 1}; }
HankelMatrix build_B(const MomentSequence& moments, std::size_t m) { return {moments, m, 1}; }

RationalDiagonal order_diagonal(std::size_t m) {
  if (m == 0) throw DimensionError("order M must be at least 1");
  RationalDiagonal d;
  d.diag.reserve(m);
  for (std::size_t k = 0; k < m; ++k) d.diag.emplace_back(static_cast<long>(2 * k + 1));
  return d;
}

RationalDiagonal sigma_diagonal(std::size_t m, const Rational& sigma2) {
  if (sgn(sigma2) <= 0)
    throw InvalidDistribution("variance must be positive, got " + to_string(sigma2));
  RationalDiagonal d;
  d.diag.reserve(m);
  Rational power = 1;
  for (std::size_t k = 0; k < m; ++k) {
    d.diag.push_back(power);
    power *= sigma2;
  }
  return d;
}

Rational determinant(const RationalMatrix& h) {
  if (!h.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = h.rows();
  if (n == 0) return 1;

  // Scale each row to integers; det(h) = det(scaled) / prod(row scales).
  Matrix<Integer> work(n, n);
  Integer scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), h(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) work(i, j) = h(i, j).get_num() * (row_lcm / h(i, j).get_den());
    scale_product *= row_lcm;
  }

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && work(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(work(k, j), work(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        work(i, j) = work(i, j) * work(k, k) - work(i, k) * work(k, j);
        // Sylvester's identity guarantees exact division.
        mpz_divexact(work(i, j).get_mpz_t(), work(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = work(k, k);
  }
  Rational det(work(n - 1, n - 1), scale_product);
  det.canonicalize();
  return sign < 0 ? Rational(-det) : det;
}

CheckReport check_scaling_split(const HankelMatrix& a, const HankelMatrix& b, const Rational& sigma2) {
  const std::size_t m = a.order();
  if (b.order() != m) throw DimensionError("A and B must have the same order");
  const auto unit = gaussian_even_moments(m, 1);
  const auto d_sigma = sigma_diagonal(m, sigma2);

  const RationalMatrix a_split = d_sigma * (build_A(unit).entries() * d_sigma);
  const RationalMatrix b_split = sigma2 * (d_sigma * (build_B(unit).entries() * d_sigma));

  CheckReport report = compare_exact("scaling_split", "A vs D_sigma A0 D_sigma", a_split, a.entries());
  return merge_into(report, compare_exact("scaling_split", "B vs sigma^2 D_sigma B0 D_sigma", b_split,
                                          b.entries()));
}

CheckReport check_recurrence(const HankelMatrix& a, const HankelMatrix& b, const Rational& sigma2) {
  const std::size_t m = a.order();
  if (b.order() != m) throw DimensionError("A and B must have the same order");
  if (sgn(sigma2) <= 0)
    throw InvalidDistribution("variance must be positive, got " + to_string(sigma2));
  const auto d = order_diagonal(m);
  const Rational inv_sigma2 = 1 / sigma2;
  const RationalMatrix& am = a.entries();

  const RationalMatrix lhs = am * d + d * am;
  const RationalMatrix rhs = am + inv_sigma2 * b.entries();
  CheckReport report = compare_exact("recurrence", "AD + DA vs A + sigma^-2 B", rhs, lhs);

  RationalDiagonal d_minus_i = d;
  for (auto& entry : d_minus_i.diag) entry -= 1;
  const RationalMatrix alt = d * (am * d) - d_minus_i * (am * d_minus_i);
  return merge_into(report, compare_exact("recurrence", "sigma^-2 B vs DAD - (D-I)A(D-I)",
                                          inv_sigma2 * b.entries(), alt));
}

CheckReport check_determinant_products(std::size_t m, const Rational& sigma2) {
  const auto moments = gaussian_even_moments(m, sigma2);
  const Rational det_a = determinant(build_A(moments));
  const Rational det_b = determinant(build_B(moments));

  Rational prod_odd = 1;
  Rational prod_even = 1;
  for (std::size_t k = 0; k < m; ++k) {
    prod_odd *= Rational(factorial(2 * k + 1));
    prod_even *= Rational(factorial(2 * k));
  }
  const Rational closed_b = pow(sigma2, m * m) * prod_odd;
  const Rational closed_a = pow(sigma2, m * (m - 1)) * prod_even;
  const Rational closed_ratio = pow(sigma2, m) * order_diagonal(m).determinant();

  CheckReport report = compare_exact("determinant_products", "det B", closed_b, det_b);
  merge_into(report, compare_exact("determinant_products", "det A", closed_a, det_a));
  merge_into(report, compare_exact("determinant_products", "det B / det A", closed_ratio, det_b / det_a));
  return report;
}

}  // namespace hmoment
