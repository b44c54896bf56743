#pragma once

#include <optional>
#include <span>
#include <vector>

#include "elemop/exact.hpp"
#include "elemop/spaces/operator_space.hpp"

namespace elemop {

struct CoefficientPair {
  Mat a;
  Mat b;
};

/// x -> sum_i a_i x b_i on the d x d matrices. An empty pair list is the
/// zero operator.
class ElementaryOperator {
 public:
  ElementaryOperator() = default;
  ElementaryOperator(Index dim, std::vector<CoefficientPair> pairs);

  static ElementaryOperator zero(Index dim) { return ElementaryOperator(dim, {}); }
  /// Builds sum_i M_{u_i, v_i}.
  static ElementaryOperator from_lists(Index dim, const std::vector<Mat>& u, const std::vector<Mat>& v);

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<CoefficientPair>& pairs() const { return pairs_; }
  const Mat& a(Index i) const { return pairs_[static_cast<std::size_t>(i)].a; }
  const Mat& b(Index i) const { return pairs_[static_cast<std::size_t>(i)].b; }
  std::vector<Mat> left_coefficients() const;
  std::vector<Mat> right_coefficients() const;

  Mat operator()(const Mat& x) const;

  /// Pairwise equality of the stored representation (not of the maps).
  friend bool operator==(const ElementaryOperator&, const ElementaryOperator&);

 private:
  Index dim_ = 0;
  std::vector<CoefficientPair> pairs_;
};

Mat apply(const ElementaryOperator& phi, const Mat& x);

/// The two operators agree on every matrix unit, hence as maps.
bool same_map(const ElementaryOperator& lhs, const ElementaryOperator& rhs);

/// phi(E_kl) for every matrix unit, row-major in (k, l).
std::vector<Mat> images_of_units(const ElementaryOperator& phi);

struct LengthReduction {
  Index length = 0;
  ElementaryOperator reduced;
  bool is_zero = false;
};

/// Length = rank of sum_i vec(a_i) vec(b_i)^T; the reduced operator is read
/// off a rank factorization of that d^2 x d^2 matrix.
LengthReduction minimal_length(const ElementaryOperator& phi);

/// True when the pair list is already a minimal representation.
bool is_length_reduced(const ElementaryOperator& phi);

OperatorSpace left_space(const ElementaryOperator& phi);
OperatorSpace right_space(const ElementaryOperator& phi);
OperatorSpace v_space(const ElementaryOperator& phi);

/// n x n grid of d x d blocks, block (i, j) = b_i a_j.
class GramMatrix {
 public:
  GramMatrix(Index n, Index d, std::vector<Mat> blocks);

  Index n() const { return n_; }
  Index dim() const { return d_; }
  const Mat& operator()(Index i, Index j) const { return blocks_[static_cast<std::size_t>(i * n_ + j)]; }

  /// Blockwise P^{-1} G P.
  GramMatrix similar(const Mat& P) const;

  /// The n x n scalar matrix read off coordinate (p, q) of every block.
  Mat slice(Index p, Index q) const;
  /// span of all slices; its dimension equals dim V(phi).
  OperatorSpace coordinate_space() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&);

 private:
  Index n_;
  Index d_;
  std::vector<Mat> blocks_;
};

GramMatrix gram(const ElementaryOperator& phi);

/// Coefficients u, v of a representation; P relates it to its source by
/// u_j = sum_k P_kj a_k and v_i = sum_k (P^{-1})_ik b_k.
struct Representation {
  std::vector<Mat> u;
  std::vector<Mat> v;
  std::optional<Mat> P;

  Index size() const { return static_cast<Index>(u.size()); }
  ElementaryOperator as_operator(Index dim) const;
};

/// Representation with left coefficients U (a basis of L(phi)).
Representation change_left_basis(const ElementaryOperator& phi, const std::vector<Mat>& U);

/// Representation obtained by the invertible scalar matrix P.
Representation similarity_transform(const ElementaryOperator& phi, const Mat& P);

/// phi* = sum M_{b_i, a_i}
ElementaryOperator adjoint_flip(const ElementaryOperator& phi);

/// psi o phi vanishes on every element of the given spanning set (all matrix
/// units when empty).
bool compose_is_zero(const ElementaryOperator& psi, const ElementaryOperator& phi,
                     std::span<const Mat> basis_of_A = {});

/// Matrix of phi(x) on L(phi) zeta in the basis {a_j zeta}: entry (i, j) is
/// the scalar lambda with x b_i a_j zeta = lambda zeta.
Mat local_matrix(const ElementaryOperator& phi, const Vec& zeta, const Mat& x);

Mat sum_bi_ai(const ElementaryOperator& phi);

/// A matrix x with x y_k = targets_k for a linearly independent list y_k
/// (and x = 0 on a fixed complement).
Mat map_vectors(const std::vector<Vec>& y, const std::vector<Vec>& targets, Index dim);

}  // namespace elemop
