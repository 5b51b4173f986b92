#pragma once

#include <vector>

#include "hmoment/matrix.hpp"

namespace hmoment {

struct SymmetricEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  Matrix<double> vectors;
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic Jacobi rotations. The input must be symmetric to within
/// 1e-12 * max|entry|; throws IterationLimit when the off-diagonal mass
/// does not vanish within kMaxJacobiSweeps sweeps.
SymmetricEigen symmetric_eigen(const Matrix<double>& c);

double infinity_norm(const Matrix<double>& m);

/// ||C v - lambda v||_2 for column k of the decomposition.
double eigen_residual(const Matrix<double>& c, const SymmetricEigen& eig, std::size_t k);

}  // namespace hmoment
