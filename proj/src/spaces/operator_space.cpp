#include "elemop/spaces/operator_space.hpp"

#include <algorithm>

#include "elemop/exact/grid.hpp"

namespace elemop {

namespace {

IncrementalBasis<GaussRational> span_of(const OperatorSpace& space) {
  IncrementalBasis<GaussRational> span(space.ambient * space.ambient);
  for (const auto& b : space.basis) span.add(vectorize(b));
  return span;
}

Vec ones(Index n) { return Vec::Constant(n, GaussRational(1)); }

}  // namespace

bool OperatorSpace::contains(const Mat& m) const { return coordinates(m).has_value(); }

std::optional<Vec> OperatorSpace::coordinates(const Mat& m) const {
  if (m.rows() != ambient || m.cols() != ambient) throw ShapeError("OperatorSpace: shape mismatch");
  return span_of(*this).coordinates(vectorize(m));
}

Mat OperatorSpace::combination(const Vec& c) const {
  if (c.size() != dim()) throw ShapeError("OperatorSpace::combination: length mismatch");
  Mat m = zero_matrix<GaussRational>(ambient, ambient);
  for (Index k = 0; k < dim(); ++k) {
    if (!c(k).is_zero()) m += c(k) * basis[static_cast<std::size_t>(k)];
  }
  return m;
}

OperatorSpace reduce_basis(std::span<const Mat> mats, Index ambient) {
  if (ambient < 0) ambient = mats.empty() ? 0 : mats.front().rows();
  OperatorSpace space{ambient, {}};
  IncrementalBasis<GaussRational> span(ambient * ambient);
  for (const auto& m : mats) {
    if (m.rows() != ambient || m.cols() != ambient) throw ShapeError("reduce_basis: shape mismatch");
    if (span.add(vectorize(m))) space.basis.push_back(m);
  }
  return space;
}

Mat hat_matrix(const OperatorSpace& space, const Vec& zeta) {
  if (zeta.size() != space.ambient) throw ShapeError("evaluate: vector length mismatch");
  Mat h(space.ambient, space.dim());
  for (Index k = 0; k < space.dim(); ++k) h.col(k) = space.basis[static_cast<std::size_t>(k)] * zeta;
  return h;
}

Subspace evaluate(const OperatorSpace& space, const Vec& zeta) {
  const Mat h = hat_matrix(space, zeta);
  return {space.ambient, column_space_basis(h)};
}

Index evaluated_dim(const OperatorSpace& space, const Vec& zeta) {
  return rank(hat_matrix(space, zeta));
}

LocalDimResult local_dimension(const OperatorSpace& space, const SamplingOptions& opts) {
  if (opts.trials < 1) throw DomainError("local_dimension: trials must be >= 1");
  const Index d = space.ambient;
  const Index cap = std::min(space.dim(), d);
  LocalDimResult best{0, zero_vector<GaussRational>(d), true, false, 0};
  if (cap == 0) {
    best.exact = true;
    return best;
  }

  if (d * d * space.dim() <= opts.exact_gate) {
    // Each r x r minor of the hat matrix is a polynomial of degree r <= cap in
    // zeta, so it is nonzero somewhere on {0..cap}^d iff it is nonzero at all.
    best.exact = true;
    for_each_grid_point(d, static_cast<long>(cap), [&](const std::vector<long>& t, Index) {
      Vec zeta(d);
      for (Index i = 0; i < d; ++i) zeta(i) = GaussRational(t[static_cast<std::size_t>(i)]);
      ++best.trials_used;
      const Index r = evaluated_dim(space, zeta);
      if (r > best.value) {
        best.value = r;
        best.witness = zeta;
      }
      return best.value < cap;
    });
    return best;
  }

  Rng rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Vec zeta = trial == 0 ? ones(d) : random_vector(rng, d, opts.height);
    ++best.trials_used;
    const Index r = evaluated_dim(space, zeta);
    if (r > best.value || trial == 0) {
      best.value = r;
      best.witness = zeta;
    }
    if (best.value == cap) {
      best.exact = true;
      break;
    }
  }
  return best;
}

SeparatingSearch simultaneous_separating_vector(std::span<const OperatorSpace> spaces,
                                                std::span<const Index> targets,
                                                const SamplingOptions& opts) {
  if (spaces.size() != targets.size()) throw ShapeError("simultaneous_separating_vector: target count");
  if (spaces.empty()) throw DomainError("simultaneous_separating_vector: no spaces");
  const Index d = spaces.front().ambient;
  for (const auto& s : spaces) {
    if (s.ambient != d) throw ShapeError("simultaneous_separating_vector: ambient mismatch");
  }
  SeparatingSearch out;
  std::size_t best_hits = 0;
  Rng rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Vec zeta = trial == 0 ? ones(d) : random_vector(rng, d, opts.height);
    ++out.trials_used;
    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      if (evaluated_dim(spaces[i], zeta) != targets[i]) failing.push_back(i);
    }
    const std::size_t hits = spaces.size() - failing.size();
    if (trial == 0 || hits > best_hits) {
      best_hits = hits;
      out.best = zeta;
      out.failing = failing;
    }
    if (failing.empty()) {
      out.vector = zeta;
      return out;
    }
  }
  return out;
}

DependenceResult is_locally_linearly_dependent(const OperatorSpace& space, const SamplingOptions& opts) {
  const LocalDimResult ld = local_dimension(space, opts);
  DependenceResult out;
  out.trials_used = ld.trials_used;
  out.dependent = ld.value < space.dim();
  // Reaching dim V is a proof of independence; a deficit is only proven in
  // exact mode.
  out.exact = ld.exact || !out.dependent;
  if (!out.dependent) out.witness = ld.witness;
  return out;
}

RankOne rank_one_factor(const Mat& m) {
  const Index r = rank(m);
  if (r != 1) throw RankError(static_cast<std::size_t>(r), "rank_one_factor: rank is " + std::to_string(r));
  Index row = 0;
  while (is_zero_matrix(m.row(row))) ++row;
  Index col = 0;
  while (m(row, col).is_zero()) ++col;
  RankOne out;
  const GaussRational pivot = m(row, col);
  out.functional = m.row(row).transpose();
  for (Index j = 0; j < out.functional.size(); ++j) out.functional(j) /= pivot;
  out.column = m.col(col);
  if (out.matrix() != m) throw InconsistencyError("rank_one_factor: reconstruction failed");
  return out;
}

HatSpaceCheck hat_space(const OperatorSpace& space, std::span<const Vec> probes, Index local_dim) {
  HatSpaceCheck out;
  for (const auto& zeta : probes) out.max_rank = std::max(out.max_rank, evaluated_dim(space, zeta));
  out.within_bound = out.max_rank <= local_dim;
  return out;
}

}  // namespace elemop
