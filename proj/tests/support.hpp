#pragma once

#include <initializer_list>

#include "elemop/exact.hpp"

namespace elemop::testing {

inline Mat M(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = GaussRational(v);
    ++i;
  }
  return m;
}

inline Vec V(std::initializer_list<long> entries) {
  Vec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = GaussRational(e);
  return v;
}

/// 1-based matrix unit.
inline Mat E(Index d, Index i, Index j) { return matrix_unit<GaussRational>(d, i - 1, j - 1); }

inline Mat I(Index d) { return identity_matrix<GaussRational>(d); }

inline GaussRational q(long p, long r = 1) { return GaussRational(mpq_class(p, r)); }

inline GaussRational gi(long re, long im) { return GaussRational(mpq_class(re), mpq_class(im)); }

/// Strictly upper triangular with random integer entries.
inline Mat random_strict_upper(Rng& rng, Index d, std::uint64_t h = 5) {
  Mat m = zero_matrix<GaussRational>(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) m(i, j) = GaussRational(rng.integer(h));
  }
  return m;
}

/// Entries with nonzero imaginary parts too.
inline Mat random_complex(Rng& rng, Index r, Index c, std::uint64_t h = 5) {
  Mat m(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) m(i, j) = GaussRational(rng.rational(h), rng.rational(h));
  }
  return m;
}

}  // namespace elemop::testing

#include "elemop/operator/elementary_operator.hpp"

namespace elemop::testing {

/// u_j = E_j1, v = (E22, E11 + E23, -E12) in M_3.
inline ElementaryOperator form2_specimen() {
  return ElementaryOperator::from_lists(3, {E(3, 1, 1), E(3, 2, 1), E(3, 3, 1)},
                                        {E(3, 2, 2), Mat(E(3, 1, 1) + E(3, 2, 3)), Mat(-E(3, 1, 2))});
}

/// u = (E21, E31 + E42, E22), v = (E14, E12, -E13) in M_4.
inline ElementaryOperator form3_specimen() {
  return ElementaryOperator::from_lists(4, {E(4, 2, 1), Mat(E(4, 3, 1) + E(4, 4, 2)), E(4, 2, 2)},
                                        {E(4, 1, 4), E(4, 1, 2), Mat(-E(4, 1, 3))});
}

inline ElementaryOperator single(const Mat& a, const Mat& b) {
  return ElementaryOperator(a.rows(), {{a, b}});
}

}  // namespace elemop::testing
