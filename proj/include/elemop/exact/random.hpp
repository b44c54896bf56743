#pragma once

#include <cstdint>
#include <random>

#include "elemop/exact/matrix.hpp"

namespace elemop {

/// Seeded generator whose output is identical on every platform: the raw
/// mt19937_64 stream is standardized, and bounded draws use our own
/// rejection sampling instead of std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Reduced rational with |numerator| <= height and 1 <= denominator <= height.
  mpq_class rational(std::uint64_t height);
  /// Integer in [-height, height].
  mpq_class integer(std::uint64_t height);

  /// Derives an independent stream (e.g. per trial) from a base seed.
  static std::uint64_t mix(std::uint64_t x);
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL));
  }

 private:
  std::mt19937_64 engine_;
};

/// Square matrix of side d with rational entries bounded by height,
/// a pure function of (d, seed, height).
Mat random_matrix(Index d, std::uint64_t seed, std::uint64_t height);

Mat random_matrix(Rng& rng, Index rows, Index cols, std::uint64_t height);
/// Integer entries in [-height, height].
Mat random_integer_matrix(Rng& rng, Index rows, Index cols, std::uint64_t height);
Vec random_vector(Rng& rng, Index n, std::uint64_t height);
Vec random_integer_vector(Rng& rng, Index n, std::uint64_t height);
/// Invertible matrix with small integer entries (resampled until invertible).
Mat random_invertible(Rng& rng, Index n, std::uint64_t height);

}  // namespace elemop
