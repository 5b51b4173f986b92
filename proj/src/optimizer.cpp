#include "hmoment/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hmoment/eigen.hpp"
#include "hmoment/errors.hpp"
#include "hmoment/factorization.hpp"
#include "hmoment/hermite.hpp"

namespace hmoment {
namespace {

Rational quadratic_form(std::span<const Rational> a, const RationalMatrix& m) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) row += m(i, j) * a[j];
    total += a[i] * row;
  }
  return total;
}

// Forward substitution L y = b, L lower triangular.
std::vector<double> solve_lower(const Matrix<double>& l, std::vector<double> b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
    b[i] /= l(i, i);
  }
  return b;
}

// Back substitution L^T y = b.
std::vector<double> solve_lower_transposed(const Matrix<double>& l, std::vector<double> b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    for (std::size_t k = i + 1; k < b.size(); ++k) b[i] -= l(k, i) * b[k];
    b[i] /= l(i, i);
  }
  return b;
}

RationalMatrix weighted_a(const HankelMatrix& a, const RationalDiagonal& d) {
  return d * (a.entries() * d);
}

void check_shapes(const HankelMatrix& a, const HankelMatrix& b, const RationalDiagonal& d) {
  if (a.order() != b.order() || d.size() != a.order())
    throw DimensionError("A, B and D must share the same order");
}

struct Whitened {
  Matrix<double> c;
  // Floating route.
  Matrix<double> cholesky;
  // Exact route: B = L~ diag(pivots) L~^T.
  RationalMatrix lower_inverse;
  std::vector<double> pivot_roots;
  bool ill_conditioned = false;
};

Whitened whiten(const HankelMatrix& a, const HankelMatrix& b, const RationalDiagonal& d, Whitening mode) {
  check_shapes(a, b, d);
  const std::size_t m = a.order();
  const RationalMatrix dad = weighted_a(a, d);
  Whitened out;
  out.c = Matrix<double>(m, m);

  if (mode == Whitening::floating) {
    auto chol = float_cholesky(to_double(b.entries()));
    out.ill_conditioned = chol.ill_conditioned;
    const Matrix<double> p = to_double(dad);
    // Y = L^-1 P, then C = L^-1 Y^T since P is symmetric.
    Matrix<double> y(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = p(i, j);
      col = solve_lower(chol.lower, std::move(col));
      for (std::size_t i = 0; i < m; ++i) y(i, j) = col[i];
    }
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = y(j, i);
      col = solve_lower(chol.lower, std::move(col));
      for (std::size_t i = 0; i < m; ++i) out.c(i, j) = col[i];
    }
    out.cholesky = std::move(chol.lower);
  } else {
    const auto ldl = ldl_decompose(b.entries(), PivotPolicy::strict);
    out.lower_inverse = unit_lower_inverse(ldl.lower);
    const RationalMatrix congruent = out.lower_inverse * dad * out.lower_inverse.transpose();
    out.pivot_roots.resize(m);
    for (std::size_t k = 0; k < m; ++k) out.pivot_roots[k] = std::sqrt(ldl.pivots[k].get_d());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        out.c(i, j) = congruent(i, j).get_d() / out.pivot_roots[i] / out.pivot_roots[j];
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) out.c(i, j) = out.c(j, i) = 0.5 * (out.c(i, j) + out.c(j, i));
  return out;
}

// a = x L^-1 as a row vector.
std::vector<double> recover_coefficients(const Whitened& w, const std::vector<double>& x) {
  if (!w.lower_inverse.rows()) return solve_lower_transposed(w.cholesky, x);
  const std::size_t m = x.size();
  std::vector<double> scaled(m);
  for (std::size_t i = 0; i < m; ++i) scaled[i] = x[i] / w.pivot_roots[i];
  std::vector<double> a(m, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = j; i < m; ++i) a[j] += scaled[i] * w.lower_inverse(i, j).get_d();
  return a;
}

}  // namespace

Rational gain_of(std::span<const Rational> a, const MomentSequence& moments) {
  if (a.empty()) throw DegeneratePolynomial("empty coefficient vector");
  const std::size_t m = a.size();
  const auto hankel_a = build_A(moments, m);
  const auto hankel_b = build_B(moments, m);
  const Rational denominator = quadratic_form(a, hankel_b.entries());
  if (denominator == 0) throw DegeneratePolynomial("a B a^T vanishes; the gain is undefined");
  return quadratic_form(a, weighted_a(hankel_a, order_diagonal(m))) / denominator;
}

Rational gain_of(const OddPolynomial& poly, const MomentSequence& moments) {
  const auto exact = to_exact(poly);
  return gain_of(std::span<const Rational>(exact), moments);
}

Matrix<double> whitened_form(const HankelMatrix& a, const HankelMatrix& b, const RationalDiagonal& d,
                             Whitening whitening) {
  return whiten(a, b, d, whitening).c;
}

GainResult max_gain(const MomentSequence& moments, std::size_t order_n, const MaxGainOptions& options) {
  if (order_n % 2 == 0) throw DimensionError("polynomial order N must be odd, got " + std::to_string(order_n));
  const std::size_t m = (order_n + 1) / 2;
  const auto a = build_A(moments, m);
  const auto b = build_B(moments, m);
  const auto d = order_diagonal(m);

  // A strictly positive definite B is a precondition on both routes.
  ldl_decompose(b.entries(), PivotPolicy::strict);
  const Whitened w = whiten(a, b, d, options.whitening);
  const SymmetricEigen eig = symmetric_eigen(w.c);

  GainResult result;
  result.ill_conditioned = w.ill_conditioned;
  result.eigenvalues = eig.values;
  const std::size_t top = m - 1;
  result.gain = eig.values[top];
  result.residual = eigen_residual(w.c, eig, top);
  if (result.residual > options.solver_tolerance * std::max(1.0, infinity_norm(w.c)))
    throw IterationLimit(result.residual, "top eigenpair residual exceeds the solver tolerance");

  const double spread = 1e-9 * std::max(1.0, std::abs(result.gain));
  result.multiplicity = static_cast<std::size_t>(
      std::count_if(eig.values.begin(), eig.values.end(), [&](double v) { return result.gain - v <= spread; }));

  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = eig.vectors(i, top);
  std::vector<double> coeffs = recover_coefficients(w, x);

  double max_abs = 0.0;
  std::size_t max_index = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (std::abs(coeffs[k]) > max_abs) {
      max_abs = std::abs(coeffs[k]);
      max_index = k;
    }
  if (max_abs == 0.0) throw DegeneratePolynomial("optimal eigenvector maps to a zero polynomial");

  // Sign convention: first significant coefficient positive.
  for (std::size_t k = 0; k < m; ++k)
    if (std::abs(coeffs[k]) > 1e-12 * max_abs) {
      if (coeffs[k] < 0) {
        for (auto& c : coeffs) c = -c;
        for (auto& v : x) v = -v;
      }
      break;
    }

  double divisor = coeffs[m - 1];
  result.normalized_by_last = std::abs(divisor) >= 1e-12 * max_abs;
  if (!result.normalized_by_last) divisor = coeffs[max_index];
  for (auto& c : coeffs) c /= divisor;

  result.a = OddPolynomial{std::move(coeffs)};
  result.whitened_vector = std::move(x);
  result.gain_exact = gain_of(result.a, moments);
  return result;
}

GainResult max_gain(const DistributionSpec& dist, std::size_t order_n, const MaxGainOptions& options) {
  if (order_n % 2 == 0) throw DimensionError("polynomial order N must be odd, got " + std::to_string(order_n));
  return max_gain(even_moments(dist, (order_n + 1) / 2), order_n, options);
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kScale = 0x1.0p-53;
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

MonteCarloEstimate monte_carlo_gain(const OddPolynomial& poly, double sigma2, std::size_t n_samples,
                                    std::uint64_t seed, const MonteCarloOptions& options) {
  if (n_samples < 2) throw DimensionError("Monte Carlo needs at least two samples");
  if (!(sigma2 > 0.0)) throw InvalidDistribution("variance must be positive");
  if (!(options.proposal_scale > 0.0)) throw InvalidDistribution("proposal scale must be positive");
  if (poly.a.empty()) throw DegeneratePolynomial("empty coefficient vector");

  const double tau = options.proposal_scale;
  const double sigma = std::sqrt(sigma2);
  const double exponent = 0.5 * (tau * tau - 1.0);

  struct Draw {
    double weight, num, den;
  };
  auto draw = [&](NormalStream& stream) {
    const double z = stream.next();
    const double s = tau * sigma * z;
    const double fp = eval_odd_poly_derivative(poly, s);
    const double f = eval_odd_poly(poly, s);
    return Draw{tau * std::exp(-exponent * z * z), fp * fp, f * f};
  };

  long double sum_num = 0.0L;
  long double sum_den = 0.0L;
  {
    NormalStream stream(seed);
    for (std::size_t i = 0; i < n_samples; ++i) {
      const Draw d = draw(stream);
      sum_num += static_cast<long double>(d.weight) * d.num;
      sum_den += static_cast<long double>(d.weight) * d.den;
    }
  }
  if (sum_den == 0.0L) throw DegeneratePolynomial("f vanished on every sample");
  const long double ratio = sum_num / sum_den;

  // Second pass over the same stream for the centred delta-method variance.
  long double sum_sq = 0.0L;
  {
    NormalStream stream(seed);
    for (std::size_t i = 0; i < n_samples; ++i) {
      const Draw d = draw(stream);
      const long double r = static_cast<long double>(d.weight) * (d.num - ratio * d.den);
      sum_sq += r * r;
    }
  }
  const long double n = static_cast<long double>(n_samples);
  const long double se = std::sqrt(sum_sq * n / (n - 1.0L)) / sum_den;
  return {static_cast<double>(ratio), static_cast<double>(se), n_samples};
}

}  // namespace hmoment
