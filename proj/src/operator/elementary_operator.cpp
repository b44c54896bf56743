#include "elemop/operator/elementary_operator.hpp"

#include <string>

namespace elemop {

namespace {

std::size_t idx(Index i) { return static_cast<std::size_t>(i); }

Mat vec_columns(const std::vector<Mat>& mats, Index d) {
  Mat m(d * d, static_cast<Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) m.col(static_cast<Index>(k)) = vectorize(mats[k]);
  return m;
}

std::vector<Mat> combine(const std::vector<Mat>& mats, const Mat& coeffs, bool by_column, Index d) {
  // by_column: out_j = sum_k coeffs(k, j) mats_k; otherwise out_i = sum_k coeffs(i, k) mats_k.
  const Index n = static_cast<Index>(mats.size());
  std::vector<Mat> out;
  for (Index j = 0; j < n; ++j) {
    Mat acc = zero_matrix<GaussRational>(d, d);
    for (Index k = 0; k < n; ++k) {
      const GaussRational& c = by_column ? coeffs(k, j) : coeffs(j, k);
      if (!c.is_zero()) acc += c * mats[idx(k)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

ElementaryOperator::ElementaryOperator(Index dim, std::vector<CoefficientPair> pairs)
    : dim_(dim), pairs_(std::move(pairs)) {
  if (dim_ < 1) throw ShapeError("ElementaryOperator: dimension must be positive");
  for (const auto& p : pairs_) {
    if (p.a.rows() != dim_ || p.a.cols() != dim_ || p.b.rows() != dim_ || p.b.cols() != dim_) {
      throw ShapeError("ElementaryOperator: coefficients must be " + std::to_string(dim_) + "x" +
                       std::to_string(dim_));
    }
  }
}

ElementaryOperator ElementaryOperator::from_lists(Index dim, const std::vector<Mat>& u,
                                                  const std::vector<Mat>& v) {
  if (u.size() != v.size()) throw ShapeError("ElementaryOperator: coefficient lists differ in length");
  std::vector<CoefficientPair> pairs;
  for (std::size_t i = 0; i < u.size(); ++i) pairs.push_back({u[i], v[i]});
  return ElementaryOperator(dim, std::move(pairs));
}

std::vector<Mat> ElementaryOperator::left_coefficients() const {
  std::vector<Mat> out;
  for (const auto& p : pairs_) out.push_back(p.a);
  return out;
}

std::vector<Mat> ElementaryOperator::right_coefficients() const {
  std::vector<Mat> out;
  for (const auto& p : pairs_) out.push_back(p.b);
  return out;
}

Mat ElementaryOperator::operator()(const Mat& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw ShapeError("apply: argument has the wrong shape");
  Mat out = zero_matrix<GaussRational>(dim_, dim_);
  for (const auto& p : pairs_) out += p.a * (x * p.b).eval();
  return out;
}

bool operator==(const ElementaryOperator& l, const ElementaryOperator& r) {
  if (l.dim_ != r.dim_ || l.pairs_.size() != r.pairs_.size()) return false;
  for (std::size_t i = 0; i < l.pairs_.size(); ++i) {
    if (l.pairs_[i].a != r.pairs_[i].a || l.pairs_[i].b != r.pairs_[i].b) return false;
  }
  return true;
}

Mat apply(const ElementaryOperator& phi, const Mat& x) { return phi(x); }

std::vector<Mat> images_of_units(const ElementaryOperator& phi) {
  std::vector<Mat> out;
  const Index d = phi.dim();
  out.reserve(idx(d * d));
  // phi(E_kl) = sum_i (column k of a_i)(row l of b_i)
  for (Index k = 0; k < d; ++k) {
    for (Index l = 0; l < d; ++l) {
      Mat m = zero_matrix<GaussRational>(d, d);
      for (const auto& p : phi.pairs()) m += p.a.col(k) * p.b.row(l);
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool same_map(const ElementaryOperator& lhs, const ElementaryOperator& rhs) {
  if (lhs.dim() != rhs.dim()) return false;
  const auto l = images_of_units(lhs);
  const auto r = images_of_units(rhs);
  return l == r;
}

LengthReduction minimal_length(const ElementaryOperator& phi) {
  const Index d = phi.dim();
  LengthReduction out;
  if (phi.empty()) {
    out.is_zero = true;
    out.reduced = ElementaryOperator::zero(d);
    return out;
  }
  const Mat A = vec_columns(phi.left_coefficients(), d);
  const Mat B = vec_columns(phi.right_coefficients(), d);
  const Mat C = A * B.transpose();
  const Echelon<GaussRational> e = row_reduce(C);
  out.length = e.rank();
  out.is_zero = out.length == 0;
  std::vector<CoefficientPair> pairs;
  for (Index k = 0; k < e.rank(); ++k) {
    const Vec u = C.col(e.pivots[idx(k)]);
    const Vec v = e.rref.row(k).transpose();
    pairs.push_back({unvectorize(u, d, d), unvectorize(v, d, d)});
  }
  out.reduced = ElementaryOperator(d, std::move(pairs));
  return out;
}

bool is_length_reduced(const ElementaryOperator& phi) {
  const Index d = phi.dim();
  return rank(vec_columns(phi.left_coefficients(), d)) == phi.size() &&
         rank(vec_columns(phi.right_coefficients(), d)) == phi.size();
}

OperatorSpace left_space(const ElementaryOperator& phi) {
  const auto a = phi.left_coefficients();
  return reduce_basis(a, phi.dim());
}

OperatorSpace right_space(const ElementaryOperator& phi) {
  const auto b = phi.right_coefficients();
  return reduce_basis(b, phi.dim());
}

OperatorSpace v_space(const ElementaryOperator& phi) {
  std::vector<Mat> products;
  for (const auto& pi : phi.pairs()) {
    for (const auto& pj : phi.pairs()) products.push_back(pi.b * pj.a);
  }
  return reduce_basis(products, phi.dim());
}

GramMatrix::GramMatrix(Index n, Index d, std::vector<Mat> blocks) : n_(n), d_(d), blocks_(std::move(blocks)) {
  if (static_cast<Index>(blocks_.size()) != n * n) throw ShapeError("GramMatrix: block count mismatch");
  for (const auto& b : blocks_) {
    if (b.rows() != d || b.cols() != d) throw ShapeError("GramMatrix: block shape mismatch");
  }
}

GramMatrix GramMatrix::similar(const Mat& P) const {
  if (P.rows() != n_ || P.cols() != n_) throw ShapeError("GramMatrix::similar: P must be n x n");
  const Mat Pinv = inverse(P);
  std::vector<Mat> out;
  for (Index i = 0; i < n_; ++i) {
    for (Index j = 0; j < n_; ++j) {
      Mat acc = zero_matrix<GaussRational>(d_, d_);
      for (Index k = 0; k < n_; ++k) {
        if (Pinv(i, k).is_zero()) continue;
        for (Index l = 0; l < n_; ++l) {
          if (P(l, j).is_zero()) continue;
          acc += (Pinv(i, k) * P(l, j)) * (*this)(k, l);
        }
      }
      out.push_back(std::move(acc));
    }
  }
  return GramMatrix(n_, d_, std::move(out));
}

Mat GramMatrix::slice(Index p, Index q) const {
  Mat s(n_, n_);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = 0; j < n_; ++j) s(i, j) = (*this)(i, j)(p, q);
  }
  return s;
}

OperatorSpace GramMatrix::coordinate_space() const {
  std::vector<Mat> slices;
  for (Index p = 0; p < d_; ++p) {
    for (Index q = 0; q < d_; ++q) slices.push_back(slice(p, q));
  }
  return reduce_basis(slices, n_);
}

bool operator==(const GramMatrix& l, const GramMatrix& r) {
  return l.n_ == r.n_ && l.d_ == r.d_ && l.blocks_ == r.blocks_;
}

GramMatrix gram(const ElementaryOperator& phi) {
  std::vector<Mat> blocks;
  for (const auto& pi : phi.pairs()) {
    for (const auto& pj : phi.pairs()) blocks.push_back(pi.b * pj.a);
  }
  return GramMatrix(phi.size(), phi.dim(), std::move(blocks));
}

ElementaryOperator Representation::as_operator(Index dim) const { return ElementaryOperator::from_lists(dim, u, v); }

Representation change_left_basis(const ElementaryOperator& phi, const std::vector<Mat>& U) {
  const Index d = phi.dim();
  const Index n = phi.size();
  if (static_cast<Index>(U.size()) != n) throw BasisError("change_left_basis: need exactly n = " + std::to_string(n) + " matrices");
  for (const auto& u : U) {
    if (u.rows() != d || u.cols() != d) throw ShapeError("change_left_basis: shape mismatch");
  }
  const Mat A = vec_columns(phi.left_coefficients(), d);
  if (rank(A) != n) throw ContractError("change_left_basis: operator is not length-reduced");
  auto P = solve(A, vec_columns(U, d));
  if (!P) throw BasisError("change_left_basis: U is not contained in L(phi)");
  auto Pinv = try_inverse(*P);
  if (!Pinv) throw BasisError("change_left_basis: U is not a basis of L(phi)");
  Representation rep;
  rep.u = U;
  rep.v = combine(phi.right_coefficients(), *Pinv, false, d);
  rep.P = *P;
  return rep;
}

Representation similarity_transform(const ElementaryOperator& phi, const Mat& P) {
  const Index n = phi.size();
  if (P.rows() != n || P.cols() != n) throw ShapeError("similarity_transform: P must be n x n");
  auto Pinv = try_inverse(P);
  if (!Pinv) throw DomainError("similarity_transform: P is singular");
  Representation rep;
  rep.u = combine(phi.left_coefficients(), P, true, phi.dim());
  rep.v = combine(phi.right_coefficients(), *Pinv, false, phi.dim());
  rep.P = P;
  return rep;
}

ElementaryOperator adjoint_flip(const ElementaryOperator& phi) {
  std::vector<CoefficientPair> flipped;
  for (const auto& p : phi.pairs()) flipped.push_back({p.b, p.a});
  return ElementaryOperator(phi.dim(), std::move(flipped));
}

bool compose_is_zero(const ElementaryOperator& psi, const ElementaryOperator& phi, std::span<const Mat> basis_of_A) {
  if (psi.dim() != phi.dim()) throw ShapeError("compose_is_zero: dimension mismatch");
  if (basis_of_A.empty()) {
    for (const auto& img : images_of_units(phi)) {
      if (!is_zero_matrix(psi(img))) return false;
    }
    return true;
  }
  for (const auto& x : basis_of_A) {
    if (!is_zero_matrix(psi(phi(x)))) return false;
  }
  return true;
}

Mat local_matrix(const ElementaryOperator& phi, const Vec& zeta, const Mat& x) {
  const Index d = phi.dim();
  const Index n = phi.size();
  if (zeta.size() != d) throw ShapeError("local_matrix: zeta has the wrong length");
  if (x.rows() != d || x.cols() != d) throw ShapeError("local_matrix: x has the wrong shape");
  Mat az(d, n);
  for (Index j = 0; j < n; ++j) az.col(j) = phi.a(j) * zeta;
  if (rank(az) != n) throw PreconditionError("local_matrix: {a_j zeta} is linearly dependent");
  Index anchor = 0;
  while (zeta(anchor).is_zero()) ++anchor;
  Mat out(n, n);
  for (Index i = 0; i < n; ++i) {
    const Mat xb = x * phi.b(i);
    for (Index j = 0; j < n; ++j) {
      const Vec w = xb * az.col(j);
      const GaussRational lambda = w(anchor) / zeta(anchor);
      if (w != lambda * zeta) {
        throw PreconditionError("local_matrix: x b_" + std::to_string(i + 1) + " a_" + std::to_string(j + 1) +
                                " zeta is not a multiple of zeta");
      }
      out(i, j) = lambda;
    }
  }
  return out;
}

Mat sum_bi_ai(const ElementaryOperator& phi) {
  Mat s = zero_matrix<GaussRational>(phi.dim(), phi.dim());
  for (const auto& p : phi.pairs()) s += p.b * p.a;
  return s;
}

Mat map_vectors(const std::vector<Vec>& y, const std::vector<Vec>& targets, Index dim) {
  if (y.size() != targets.size()) throw ShapeError("map_vectors: count mismatch");
  const Mat Y = complete_basis(y, dim);
  Mat T = zero_matrix<GaussRational>(dim, dim);
  for (std::size_t k = 0; k < targets.size(); ++k) T.col(static_cast<Index>(k)) = targets[k];
  return T * inverse(Y);
}

}  // namespace elemop
