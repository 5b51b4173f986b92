#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hmoment/hankel.hpp"
#include "hmoment/matrix.hpp"
#include "hmoment/moments.hpp"
#include "hmoment/polynomial.hpp"
#include "hmoment/rational.hpp"

namespace hmoment {

/// G(a) = a D A D a^T / a B a^T, the receiving gain of f(s) = s a z^T under the
/// distribution whose moments fill A and B. Throws DegeneratePolynomial when
/// a B a^T vanishes.
Rational gain_of(std::span<const Rational> a, const MomentSequence& moments);
Rational gain_of(const OddPolynomial& poly, const MomentSequence& moments);

enum class Whitening {
  /// Double-precision Cholesky of B.
  floating,
  /// Exact LDL of B and exact congruence; only the final diagonal square
  /// roots and the eigensolve are in floating point.
  exact,
};

/// C = L^-1 D A D L^-T with B = L L^T. Its spectrum is the generalized
/// spectrum of (DAD, B).
Matrix<double> whitened_form(const HankelMatrix& a, const HankelMatrix& b, const RationalDiagonal& d,
                             Whitening whitening = Whitening::floating);

struct GainResult {
  double gain = 0.0;
  Rational gain_exact;
  OddPolynomial a;
  /// Ascending spectrum of C.
  std::vector<double> eigenvalues;
  /// Unit eigenvector x of C for the top eigenvalue, sign-matched to a.
  std::vector<double> whitened_vector;
  double residual = 0.0;
  std::size_t multiplicity = 1;
  /// False when a[M-1] was too small and a was scaled by its largest entry.
  bool normalized_by_last = true;
  /// Set when the floating Cholesky pivot ratio exceeded kPivotRatioWarning.
  bool ill_conditioned = false;
};

struct MaxGainOptions {
  Whitening whitening = Whitening::floating;
  double solver_tolerance = 1e-10;
};

/// Maximizes the gain over odd polynomials of order N (odd).
GainResult max_gain(const MomentSequence& moments, std::size_t order_n, const MaxGainOptions& options = {});
GainResult max_gain(const DistributionSpec& dist, std::size_t order_n, const MaxGainOptions& options = {});

/// Normal variates from a 64-bit Mersenne Twister by the Box-Muller transform.
/// Each pair uses two consecutive 53-bit uniforms u1 in (0, 1], u2 in [0, 1):
///   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct MonteCarloOptions {
  /// Draws come from N(0, (scale * sigma)^2) and are importance-weighted back
  /// to N(0, sigma^2). Scale 1 is plain sampling; wider proposals tame the
  /// heavy polynomial tails. Weights are bounded by `scale` when scale >= 1.
  double proposal_scale = 2.0;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Ratio estimate of E[f'(s)^2] / E[f(s)^2] for s ~ N(0, sigma2), with a
/// delta-method standard error. Deterministic for a fixed seed.
MonteCarloEstimate monte_carlo_gain(const OddPolynomial& poly, double sigma2, std::size_t n_samples,
                                    std::uint64_t seed, const MonteCarloOptions& options = {});

}  // namespace hmoment
