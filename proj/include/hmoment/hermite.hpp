#pragma once

#include <cstddef>
#include <vector>

#include "hmoment/check.hpp"
#include "hmoment/matrix.hpp"
#include "hmoment/polynomial.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

/// Probabilists' Hermite polynomial H_n in packed form: the coefficients of
/// (1, s^2, s^4, ...) for even n, or of s (1, s^2, ...) for odd n, zero-padded
/// to length M. The last nonzero entry is 1.
struct HermiteCoefficients {
  unsigned n = 0;
  std::vector<Rational> packed;
};

/// Dense coefficients of H_n over (1, s, ..., s^n), generated by
/// H_{n+1} = s H_n - n H_{n-1} from H_0 = 1, H_1 = s.
std::vector<Rational> hermite_dense(unsigned n);

/// Smallest packed length able to hold H_n.
inline std::size_t hermite_packed_length(unsigned n) { return n / 2 + 1; }

HermiteCoefficients hermite_coefficients(unsigned n, std::size_t m);

/// Unit lower-triangular matrix of packed Hermite rows: beta_1, beta_3, ... (odd)
/// or beta_0, beta_2, ... (even).
enum class HermiteParity { even, odd };

struct HermiteTriangular {
  HermiteParity parity;
  Matrix<Rational> rows;
};

HermiteTriangular build_L_b(std::size_t m);
HermiteTriangular build_L_a(std::size_t m);

/// L_b D = D L_a, the coefficient form of H_n' = n H_{n-1}.
CheckReport check_commute(std::size_t m);

/// Integral of H_n H_m against the standard normal density, contracted
/// exactly against the Gaussian moments (k-1)!!.
Rational orthogonality_integral(unsigned n, unsigned m);

/// Checks the full table orthogonality_integral(n, m) = n! [n = m] for n, m <= n_max.
CheckReport check_orthogonality(unsigned n_max);

/// Dense coefficients of p'.
std::vector<Rational> derivative(const std::vector<Rational>& dense);

double eval_odd_poly(const OddPolynomial& poly, double s);
double eval_odd_poly_derivative(const OddPolynomial& poly, double s);

}  // namespace hmoment
