#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hmoment {

/// Dense row-major matrix. Used with Rational for the exact paths and with
/// double for the floating-point optimizer.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <typename T>
Matrix<T> operator*(const T& scalar, Matrix<T> a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= scalar;
  return a;
}

/// Diagonal matrix stored as its main diagonal.
template <typename T>
struct Diagonal {
  std::vector<T> diag;

  [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
  const T& operator[](std::size_t i) const { return diag[i]; }

  [[nodiscard]] Matrix<T> dense() const {
    Matrix<T> out(diag.size(), diag.size(), T(0));
    for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
    return out;
  }

  [[nodiscard]] Diagonal inverse() const {
    Diagonal out{diag};
    for (auto& d : out.diag) d = T(1) / d;
    return out;
  }

  [[nodiscard]] T determinant() const {
    T out(1);
    for (const auto& d : diag) out *= d;
    return out;
  }

  friend Diagonal operator*(const Diagonal& a, const Diagonal& b) {
    if (a.size() != b.size()) throw std::invalid_argument("diagonal size mismatch");
    Diagonal out{a.diag};
    for (std::size_t i = 0; i < out.diag.size(); ++i) out.diag[i] *= b.diag[i];
    return out;
  }

  friend bool operator==(const Diagonal& a, const Diagonal& b) { return a.diag == b.diag; }
};

/// diag(d) * m
template <typename T>
Matrix<T> operator*(const Diagonal<T>& d, Matrix<T> m) {
  if (d.size() != m.rows()) throw std::invalid_argument("diagonal scaling dimension mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d[i];
  return m;
}

/// m * diag(d)
template <typename T>
Matrix<T> operator*(Matrix<T> m, const Diagonal<T>& d) {
  if (d.size() != m.cols()) throw std::invalid_argument("diagonal scaling dimension mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d[j];
  return m;
}

template <typename T>
bool is_symmetric(const Matrix<T>& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

}  // namespace hmoment
