#include "elemop/exact/random.hpp"

#include "elemop/exact/linalg.hpp"

namespace elemop {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

mpq_class Rng::rational(std::uint64_t height) {
  if (height == 0) throw DomainError("random rational: height must be positive");
  const auto h = static_cast<std::int64_t>(height);
  mpq_class q(static_cast<long>(uniform(-h, h)), static_cast<unsigned long>(uniform(1, h)));
  q.canonicalize();
  return q;
}

mpq_class Rng::integer(std::uint64_t height) {
  if (height == 0) throw DomainError("random integer: height must be positive");
  const auto h = static_cast<std::int64_t>(height);
  return mpq_class(static_cast<long>(uniform(-h, h)));
}

Mat random_matrix(Rng& rng, Index rows, Index cols, std::uint64_t height) {
  if (height == 0) throw DomainError("random_matrix: height must be positive");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = GaussRational(rng.rational(height));
  }
  return m;
}

Mat random_matrix(Index d, std::uint64_t seed, std::uint64_t height) {
  Rng rng(seed);
  return random_matrix(rng, d, d, height);
}

Mat random_integer_matrix(Rng& rng, Index rows, Index cols, std::uint64_t height) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = GaussRational(rng.integer(height));
  }
  return m;
}

Vec random_vector(Rng& rng, Index n, std::uint64_t height) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = GaussRational(rng.rational(height));
  return v;
}

Vec random_integer_vector(Rng& rng, Index n, std::uint64_t height) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = GaussRational(rng.integer(height));
  return v;
}

Mat random_invertible(Rng& rng, Index n, std::uint64_t height) {
  for (;;) {
    Mat m = random_integer_matrix(rng, n, n, height);
    if (rank(m) == n) return m;
  }
}

}  // namespace elemop
