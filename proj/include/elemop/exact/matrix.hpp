#pragma once

#include <Eigen/Core>
#include <concepts>
#include <vector>

#include "elemop/errors.hpp"
#include "elemop/exact/gauss_rational.hpp"

namespace elemop {

using Index = Eigen::Index;

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixX<GaussRational>;
using Vec = VectorX<GaussRational>;

/// Scalars the exact algorithms run over: a field with a decidable zero test.
template <typename T>
concept ExactField = requires(const T a, const T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename T>
MatrixX<T> zero_matrix(Index rows, Index cols) {
  return MatrixX<T>::Constant(rows, cols, T(0));
}

template <typename T>
MatrixX<T> identity_matrix(Index n) {
  MatrixX<T> m = zero_matrix<T>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <typename T>
VectorX<T> zero_vector(Index n) {
  return VectorX<T>::Constant(n, T(0));
}

template <typename T>
VectorX<T> unit_vector(Index n, Index k) {
  VectorX<T> v = zero_vector<T>(n);
  v(k) = T(1);
  return v;
}

/// The matrix unit E_kl (zero-based) of side d.
template <typename T>
MatrixX<T> matrix_unit(Index d, Index k, Index l) {
  MatrixX<T> m = zero_matrix<T>(d, d);
  m(k, l) = T(1);
  return m;
}

/// All d^2 matrix units in row-major order.
template <typename T>
std::vector<MatrixX<T>> matrix_units(Index d) {
  std::vector<MatrixX<T>> units;
  units.reserve(static_cast<std::size_t>(d * d));
  for (Index k = 0; k < d; ++k) {
    for (Index l = 0; l < d; ++l) units.push_back(matrix_unit<T>(d, k, l));
  }
  return units;
}

/// Row-major flattening of a matrix into a column vector.
template <typename T>
VectorX<T> vectorize(const MatrixX<T>& m) {
  VectorX<T> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

template <typename T>
MatrixX<T> unvectorize(const VectorX<T>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw ShapeError("unvectorize: length mismatch");
  MatrixX<T> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

/// Entrywise conjugate transpose.
inline Mat adjoint(const Mat& m) {
  Mat r(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  }
  return r;
}

inline void require_square(const Mat& m, const char* op) {
  if (m.rows() != m.cols()) throw ShapeError(std::string(op) + ": matrix is not square");
}

inline void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch");
  }
}

/// Shape-checked product; Eigen only asserts in debug builds.
inline Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeError("product: inner dimensions differ");
  return a * b;
}

}  // namespace elemop
