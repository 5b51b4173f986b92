#include "hmoment/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hmoment/errors.hpp"

namespace hmoment {

double infinity_norm(const Matrix<double>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

namespace {

double off_diagonal_norm(const Matrix<double>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix<double>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen symmetric_eigen(const Matrix<double>& c) {
  if (!c.square()) throw DimensionError("eigensolver needs a square matrix");
  const std::size_t n = c.rows();
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(c(i, j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(c(i, j) - c(j, i)) > 1e-12 * max_abs)
        throw DimensionError("eigensolver input is not symmetric");

  Matrix<double> a = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i) = 0.5 * (c(i, j) + c(j, i));
  Matrix<double> v = Matrix<double>::identity(n);

  const double scale = frobenius_norm(a);
  const double target = 1e-14 * scale;
  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Skip rotations too small to change either diagonal entry.
        if (sweep > 3 && std::abs(apq) < 1e-18 * std::abs(a(p, p)) &&
            std::abs(apq) < 1e-18 * std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = cs * akp - sn * akq;
          a(k, q) = sn * akp + cs * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = cs * apk - sn * aqk;
          a(q, k) = sn * apk + cs * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = cs * vkp - sn * vkq;
          v(k, q) = sn * vkp + cs * vkq;
        }
      }
  }
  if (off_diagonal_norm(a) > target) {
    std::ostringstream msg;
    msg << "Jacobi iteration did not converge in " << kMaxJacobiSweeps << " sweeps";
    throw IterationLimit(off_diagonal_norm(a), msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out{std::vector<double>(n), Matrix<double>(n, n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double eigen_residual(const Matrix<double>& c, const SymmetricEigen& eig, std::size_t k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    double r = -eig.values[k] * eig.vectors(i, k);
    for (std::size_t j = 0; j < c.cols(); ++j) r += c(i, j) * eig.vectors(j, k);
    sum += r * r;
  }
  return std::sqrt(sum);
}

}  // namespace hmoment
