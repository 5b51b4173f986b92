#include "hmoment/hermite.hpp"

#include <string>

#include "hmoment/errors.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/moments.hpp"

namespace hmoment {

ExactOddPolynomial to_exact(const OddPolynomial& poly) {
  ExactOddPolynomial out;
  out.reserve(poly.a.size());
  for (double c : poly.a) out.push_back(from_double(c));
  return out;
}

std::vector<Rational> hermite_dense(unsigned n) {
  std::vector<Rational> previous{Rational(1)};
  if (n == 0) return previous;
  std::vector<Rational> current{Rational(0), Rational(1)};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Rational> next(k + 2, Rational(0));
    for (std::size_t j = 0; j < current.size(); ++j) next[j + 1] += current[j];
    for (std::size_t j = 0; j < previous.size(); ++j) next[j] -= static_cast<long>(k) * previous[j];
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

HermiteCoefficients hermite_coefficients(unsigned n, std::size_t m) {
  if (m < hermite_packed_length(n))
    throw DimensionError("packed length " + std::to_string(m) + " cannot hold H_" + std::to_string(n));
  const auto dense = hermite_dense(n);
  HermiteCoefficients out{n, std::vector<Rational>(m, Rational(0))};
  for (std::size_t k = n % 2, slot = 0; k < dense.size(); k += 2, ++slot) out.packed[slot] = dense[k];
  return out;
}

namespace {

HermiteTriangular build_triangular(std::size_t m, HermiteParity parity) {
  if (m == 0) throw DimensionError("order M must be at least 1");
  HermiteTriangular out{parity, Matrix<Rational>(m, m, Rational(0))};
  const unsigned offset = parity == HermiteParity::odd ? 1 : 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto beta = hermite_coefficients(static_cast<unsigned>(2 * k + offset), m);
    for (std::size_t j = 0; j < m; ++j) out.rows(k, j) = beta.packed[j];
  }
  return out;
}

}  // namespace

HermiteTriangular build_L_b(std::size_t m) { return build_triangular(m, HermiteParity::odd); }
HermiteTriangular build_L_a(std::size_t m) { return build_triangular(m, HermiteParity::even); }

CheckReport check_commute(std::size_t m) {
  const auto d = order_diagonal(m);
  return compare_exact("commute", "L_b D vs D L_a", d * build_L_a(m).rows, build_L_b(m).rows * d);
}

Rational orthogonality_integral(unsigned n, unsigned m) {
  const auto hn = hermite_dense(n);
  const auto hm = hermite_dense(m);
  Rational total = 0;
  for (std::size_t i = 0; i < hn.size(); ++i) {
    if (hn[i] == 0) continue;
    for (std::size_t j = 0; j < hm.size(); ++j) {
      const std::size_t power = i + j;
      if (power % 2 != 0 || hm[j] == 0) continue;
      total += hn[i] * hm[j] * Rational(double_factorial(static_cast<long>(power) - 1));
    }
  }
  return total;
}

CheckReport check_orthogonality(unsigned n_max) {
  CheckReport report{"orthogonality", true, std::nullopt};
  Matrix<Rational> expected(n_max + 1, n_max + 1, Rational(0));
  Matrix<Rational> actual(n_max + 1, n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    expected(n, n) = Rational(factorial(n));
    for (unsigned m = 0; m <= n_max; ++m) actual(n, m) = orthogonality_integral(n, m);
  }
  return compare_exact("orthogonality", "E(H_n H_m) vs n! [n = m]", expected, actual);
}

std::vector<Rational> derivative(const std::vector<Rational>& dense) {
  if (dense.size() <= 1) return {Rational(0)};
  std::vector<Rational> out(dense.size() - 1);
  for (std::size_t k = 1; k < dense.size(); ++k) out[k - 1] = static_cast<long>(k) * dense[k];
  return out;
}

double eval_odd_poly(const OddPolynomial& poly, double s) {
  const double sq = s * s;
  double acc = 0.0;
  for (auto it = poly.a.rbegin(); it != poly.a.rend(); ++it) acc = acc * sq + *it;
  return s * acc;
}

double eval_odd_poly_derivative(const OddPolynomial& poly, double s) {
  const double sq = s * s;
  double acc = 0.0;
  for (std::size_t k = poly.a.size(); k-- > 0;) acc = acc * sq + static_cast<double>(2 * k + 1) * poly.a[k];
  return acc;
}

}  // namespace hmoment
