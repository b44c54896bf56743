#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "elemop/exact/matrix.hpp"

namespace elemop {

template <ExactField T>
struct Echelon {
  MatrixX<T> rref;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The pivot in
/// each column is the first nonzero entry at or below the current row.
template <ExactField T>
Echelon<T> row_reduce(MatrixX<T> m) {
  Echelon<T> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) = m(i, j) - factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

template <ExactField T>
Index rank(const MatrixX<T>& m) {
  return row_reduce(m).rank();
}

/// Exact basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column. Returned in increasing order of the free column.
template <ExactField T>
std::vector<VectorX<T>> kernel_basis(const MatrixX<T>& m) {
  const Echelon<T> e = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<T>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<T> v = zero_vector<T>(m.cols());
    v(free) = T(1);
    for (Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<std::size_t>(r)]) = -e.rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the column space, taken from the original pivot columns.
template <ExactField T>
std::vector<VectorX<T>> column_space_basis(const MatrixX<T>& m) {
  const Echelon<T> e = row_reduce(m);
  std::vector<VectorX<T>> basis;
  for (Index p : e.pivots) basis.push_back(m.col(p));
  return basis;
}

template <ExactField T>
MatrixX<T> columns_to_matrix(const std::vector<VectorX<T>>& cols, Index rows) {
  MatrixX<T> m(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("columns_to_matrix: length mismatch");
    m.col(static_cast<Index>(j)) = cols[j];
  }
  return m;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to 0.
template <ExactField T>
std::optional<MatrixX<T>> solve(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row count mismatch");
  MatrixX<T> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const Echelon<T> e = row_reduce(std::move(aug));
  for (Index p : e.pivots) {
    if (p >= a.cols()) return std::nullopt;
  }
  MatrixX<T> x = zero_matrix<T>(a.cols(), b.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    x.row(e.pivots[static_cast<std::size_t>(r)]) = e.rref.block(r, a.cols(), 1, b.cols());
  }
  return x;
}

template <ExactField T>
std::optional<MatrixX<T>> try_inverse(const MatrixX<T>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  const Index n = m.rows();
  MatrixX<T> aug(n, 2 * n);
  aug << m, identity_matrix<T>(n);
  const Echelon<T> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return MatrixX<T>(e.rref.rightCols(n));
}

template <ExactField T>
MatrixX<T> inverse(const MatrixX<T>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DomainError("inverse: matrix is singular");
  return *std::move(inv);
}

template <ExactField T>
T trace(const MatrixX<T>& m) {
  if (m.rows() != m.cols()) throw ShapeError("trace: matrix is not square");
  T t(0);
  for (Index i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// tr(a b) without forming the product.
template <ExactField T>
T trace_of_product(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw ShapeError("trace_of_product: shape mismatch");
  T t(0);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (!is_zero(a(i, j)) && !is_zero(b(j, i))) t = t + a(i, j) * b(j, i);
    }
  }
  return t;
}

/// Integer power by repeated squaring; p = 0 gives the identity.
template <ExactField T>
MatrixX<T> matrix_power(const MatrixX<T>& m, int p) {
  if (m.rows() != m.cols()) throw ShapeError("matrix_power: matrix is not square");
  MatrixX<T> result = identity_matrix<T>(m.rows());
  MatrixX<T> base = m;
  while (p > 0) {
    if (p & 1) result = (result * base).eval();
    p >>= 1;
    if (p > 0) base = (base * base).eval();
  }
  return result;
}

/// Basis of the intersection of two column spans (given as bases).
template <ExactField T>
std::vector<VectorX<T>> intersect_spans(const std::vector<VectorX<T>>& a,
                                        const std::vector<VectorX<T>>& b, Index ambient) {
  if (a.empty() || b.empty()) return {};
  const MatrixX<T> ma = columns_to_matrix(a, ambient);
  const MatrixX<T> mb = columns_to_matrix(b, ambient);
  MatrixX<T> joined(ambient, ma.cols() + mb.cols());
  joined << ma, -mb;
  std::vector<VectorX<T>> out;
  std::vector<VectorX<T>> candidates;
  for (const auto& k : kernel_basis(joined)) {
    candidates.push_back(ma * k.head(ma.cols()));
  }
  return column_space_basis(columns_to_matrix(candidates, ambient));
}

/// Incrementally maintained span of vectors, kept in echelon form, that
/// remembers how each reduced row is built from the accepted generators.
template <ExactField T>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Index ambient) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(generators_.size()); }
  const std::vector<VectorX<T>>& generators() const { return generators_; }

  /// Coordinates of v in terms of the accepted generators, or nullopt when v
  /// lies outside the span.
  std::optional<VectorX<T>> coordinates(const VectorX<T>& v) const {
    auto [residual, coeffs] = reduce(v);
    if (!is_zero_matrix(residual)) return std::nullopt;
    return coeffs;
  }

  bool contains(const VectorX<T>& v) const { return coordinates(v).has_value(); }

  /// Adds v when it is independent of the current span; returns whether it was.
  bool add(const VectorX<T>& v) {
    if (v.size() != ambient_) throw ShapeError("IncrementalBasis: length mismatch");
    auto [residual, coeffs] = reduce(v);
    Index piv = 0;
    while (piv < ambient_ && is_zero(residual(piv))) ++piv;
    if (piv == ambient_) return false;
    const Index k = dim();
    // residual = v - sum coeffs_j g_j, so as a combination it is e_k - coeffs.
    VectorX<T> combo = zero_vector<T>(k + 1);
    combo.head(k) = -coeffs;
    combo(k) = T(1);
    for (auto& c : combos_) {
      VectorX<T> grown = zero_vector<T>(k + 1);
      grown.head(k) = c;
      c = std::move(grown);
    }
    generators_.push_back(v);
    rows_.push_back(std::move(residual));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    return true;
  }

 private:
  std::pair<VectorX<T>, VectorX<T>> reduce(const VectorX<T>& v) const {
    VectorX<T> residual = v;
    VectorX<T> coeffs = zero_vector<T>(dim());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index p = pivots_[r];
      if (is_zero(residual(p))) continue;
      const T factor = residual(p) / rows_[r](p);
      for (Index i = 0; i < ambient_; ++i) {
        if (!is_zero(rows_[r](i))) residual(i) = residual(i) - factor * rows_[r](i);
      }
      for (Index j = 0; j < combos_[r].size(); ++j) {
        if (!is_zero(combos_[r](j))) coeffs(j) = coeffs(j) + factor * combos_[r](j);
      }
    }
    return {std::move(residual), std::move(coeffs)};
  }

  Index ambient_;
  std::vector<VectorX<T>> generators_;
  std::vector<VectorX<T>> rows_;
  std::vector<VectorX<T>> combos_;
  std::vector<Index> pivots_;
};

/// Completes an independent list to a basis of the ambient space with
/// standard basis vectors, returned as the columns of an invertible matrix.
template <ExactField T>
MatrixX<T> complete_basis(const std::vector<VectorX<T>>& vectors, Index ambient) {
  IncrementalBasis<T> span(ambient);
  for (const auto& v : vectors) {
    if (!span.add(v)) throw BasisError("complete_basis: vectors are dependent");
  }
  for (Index k = 0; k < ambient && span.dim() < ambient; ++k) span.add(unit_vector<T>(ambient, k));
  return columns_to_matrix(span.generators(), ambient);
}

}  // namespace elemop
