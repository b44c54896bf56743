#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elemop/exact.hpp"

namespace elemop {

/// Finite-dimensional subspace of the d x d matrices, stored as a linearly
/// independent basis.
struct OperatorSpace {
  Index ambient = 0;
  std::vector<Mat> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }
  bool contains(const Mat& m) const;
  /// Coordinates of m in the basis, nullopt when m is outside the space.
  std::optional<Vec> coordinates(const Mat& m) const;
  /// sum_k c_k basis_k
  Mat combination(const Vec& c) const;
};

/// Subspace of C^d given by a basis.
struct Subspace {
  Index ambient = 0;
  std::vector<Vec> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }
};

struct LocalDimResult {
  Index value = 0;
  Vec witness;                       // zeta with dim V zeta = value
  bool certified_lower_bound = true;  // the witness always re-verifies
  bool exact = false;                // value is lDim itself, not just a bound
  int trials_used = 0;
};

/// xi f^T with the first nonzero entry of f equal to 1.
struct RankOne {
  Vec column;
  Vec functional;

  Mat matrix() const { return column * functional.transpose(); }
};

struct SamplingOptions {
  std::uint64_t seed = 0;
  int trials = 32;
  std::uint64_t height = 100;
  /// Use the deterministic grid when d^2 * dim <= exact_gate.
  Index exact_gate = 16;
};

/// Keeps the earliest independent generators. All matrices must be
/// ambient x ambient; with no input the result is the zero space (of side
/// ambient, or 0 when not given).
OperatorSpace reduce_basis(std::span<const Mat> mats, Index ambient = -1);

/// span{T zeta : T in basis}, reduced.
Subspace evaluate(const OperatorSpace& space, const Vec& zeta);

/// dim span{T zeta}, without building the basis.
Index evaluated_dim(const OperatorSpace& space, const Vec& zeta);

LocalDimResult local_dimension(const OperatorSpace& space, const SamplingOptions& opts = {});

struct SeparatingSearch {
  std::optional<Vec> vector;             // set on success, re-verified
  Vec best;                              // best candidate seen
  std::vector<std::size_t> failing;      // spaces the best candidate misses
  int trials_used = 0;
};

/// A single zeta with dim V_i zeta = targets[i] for every i.
SeparatingSearch simultaneous_separating_vector(std::span<const OperatorSpace> spaces,
                                                std::span<const Index> targets,
                                                const SamplingOptions& opts = {});

struct DependenceResult {
  bool dependent = false;
  std::optional<Vec> witness;  // separating vector when independent
  bool exact = false;
  int trials_used = 0;
};

DependenceResult is_locally_linearly_dependent(const OperatorSpace& space,
                                               const SamplingOptions& opts = {});

/// Throws RankError carrying the rank when m is not of rank one.
RankOne rank_one_factor(const Mat& m);

struct HatSpaceCheck {
  Index max_rank = 0;
  bool within_bound = true;  // max_rank <= lDim
};

/// Rank of zeta-hat: V -> C^d, T -> T zeta, maximized over the probes and
/// compared with the supplied local dimension.
HatSpaceCheck hat_space(const OperatorSpace& space, std::span<const Vec> probes, Index local_dim);

/// The d x k matrix [T_1 zeta, ..., T_k zeta].
Mat hat_matrix(const OperatorSpace& space, const Vec& zeta);

}  // namespace elemop
