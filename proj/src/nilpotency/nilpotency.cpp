#include "elemop/nilpotency/nilpotency.hpp"

#include "elemop/exact/grid.hpp"

namespace elemop {

namespace {

std::size_t idx(Index i) { return static_cast<std::size_t>(i); }

// tr(T^p) = 0 for p = 1..m, equivalent to nilpotency in characteristic 0.
bool trace_powers_vanish(const Mat& t) {
  const Index m = t.rows();
  Mat power = t;
  for (Index p = 1; p <= m; ++p) {
    if (!trace(power).is_zero()) return false;
    if (p < m) power = power * t;
  }
  return true;
}

Mat rows_to_matrix(const std::vector<Vec>& rows, Index cols) {
  Mat m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

// Rows spanning the annihilator {y : y^T w = 0 for w in span}.
Mat annihilator(const std::vector<Vec>& span, Index m) {
  if (span.empty()) return identity_matrix<GaussRational>(m);
  return rows_to_matrix(kernel_basis(rows_to_matrix(span, m)), m);
}

Index first_nonzero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return i;
  }
  return -1;
}

}  // namespace

Mat Flag::as_matrix() const {
  if (vectors.empty()) return Mat(0, 0);
  return columns_to_matrix(vectors, vectors.front().size());
}

bool is_nilpotent(const Mat& m) {
  require_square(m, "is_nilpotent");
  if (m.rows() == 0) return true;
  return is_pure_power(char_poly(m));
}

NilpotentSpaceReport subspace_all_nilpotent(const OperatorSpace& N, const NilpotencyBudget& budget) {
  NilpotentSpaceReport report;
  report.space = N;
  const Index m = N.ambient;
  const Index k = N.dim();
  if (k == 0) return report;

  auto element = [&](const auto& coeff) {
    Mat t = zero_matrix<GaussRational>(m, m);
    for (Index i = 0; i < k; ++i) {
      const GaussRational c = coeff(i);
      if (!c.is_zero()) t += c * N.basis[static_cast<std::size_t>(i)];
    }
    return t;
  };

  // tr(T^p) is homogeneous of degree p <= m, so it vanishes identically once
  // it vanishes on the chart t_1 = 1, where the grid {0..m}^(k-1) decides it.
  if (grid_size(k - 1, static_cast<long>(m), budget.grid_evaluations) <= budget.grid_evaluations) {
    report.method = CheckMethod::ExactGrid;
    std::vector<Mat> suffix(static_cast<std::size_t>(k) + 1, zero_matrix<GaussRational>(m, m));
    for (Index i = k - 1; i >= 1; --i) suffix[idx(i)] = suffix[idx(i + 1)] + N.basis[idx(i)];
    const GaussRational top(static_cast<long>(m));
    Mat e = N.basis.front();
    for_each_grid_point(k - 1, static_cast<long>(m), [&](const std::vector<long>&, Index moved) {
      if (moved >= 0) {
        // coordinate moved + 1 stepped up, every later one fell back from m to 0
        e += N.basis[idx(moved + 1)];
        e -= top * suffix[idx(moved + 2)];
      }
      ++report.evaluations;
      if (trace_powers_vanish(e)) return true;
      report.counterexample = e;
      return false;
    });
  } else {
    report.method = CheckMethod::Randomized;
    Rng rng(budget.seed);
    for (int trial = 0; trial < budget.random_trials; ++trial) {
      ++report.evaluations;
      const Vec c = random_vector(rng, k, budget.height);
      Mat e = element([&](Index i) { return c(i); });
      if (trace_powers_vanish(e)) continue;
      report.counterexample = std::move(e);
      break;
    }
  }
  if (report.counterexample) {
    if (is_nilpotent(*report.counterexample)) {
      throw InconsistencyError("subspace_all_nilpotent: counterexample failed to re-verify");
    }
    report.all_nilpotent = false;
  }
  return report;
}

bool gerstenhaber_check(const OperatorSpace& N, const NilpotencyBudget& budget) {
  const NilpotentSpaceReport report = subspace_all_nilpotent(N, budget);
  if (!report.all_nilpotent) throw ContractError("gerstenhaber_check: space has a non-nilpotent element");
  const Index m = N.ambient;
  if (N.dim() > m * (m - 1) / 2) {
    throw InconsistencyError("gerstenhaber_check: nilpotent space of dimension " + std::to_string(N.dim()) +
                             " exceeds m(m-1)/2 = " + std::to_string(m * (m - 1) / 2));
  }
  return true;
}

std::variant<Flag, NotTriangularizable> strict_triangularize(const OperatorSpace& N) {
  const Index m = N.ambient;
  Flag flag;
  IncrementalBasis<GaussRational> prefix(m);
  for (Index stage = 1; stage <= m; ++stage) {
    std::vector<Vec> candidates;
    if (N.dim() == 0) {
      for (Index i = 0; i < m; ++i) candidates.push_back(unit_vector<GaussRational>(m, i));
    } else {
      // v with T v in the current prefix for every basis element T.
      const Mat q = annihilator(prefix.generators(), m);
      if (q.rows() == 0) break;
      Mat stacked(q.rows() * N.dim(), m);
      for (Index i = 0; i < N.dim(); ++i) stacked.middleRows(i * q.rows(), q.rows()) = q * N.basis[static_cast<std::size_t>(i)];
      candidates = kernel_basis(stacked);
    }
    bool grew = false;
    for (const auto& v : candidates) {
      if (prefix.add(v)) {
        flag.vectors.push_back(v);
        grew = true;
        break;
      }
    }
    if (!grew) return NotTriangularizable{static_cast<int>(stage)};
  }
  if (!is_strict_flag(N, flag)) throw InconsistencyError("strict_triangularize: flag failed to re-verify");
  return flag;
}

bool is_strict_flag(const OperatorSpace& N, const Flag& flag) {
  const Index m = N.ambient;
  if (static_cast<Index>(flag.vectors.size()) != m) return false;
  IncrementalBasis<GaussRational> prefix(m);
  for (const auto& v : flag.vectors) {
    if (v.size() != m) return false;
    for (const auto& t : N.basis) {
      const Vec image = t * v;
      if (!is_zero_matrix(image) && !prefix.contains(image)) return false;
    }
    if (!prefix.add(v)) return false;
  }
  return true;
}

Mat special_alpha() {
  Mat a = zero_matrix<GaussRational>(3, 3);
  a(1, 0) = GaussRational(1);
  a(2, 1) = GaussRational(-1);
  return a;
}

Mat special_beta() {
  Mat b = zero_matrix<GaussRational>(3, 3);
  b(0, 1) = GaussRational(1);
  b(1, 2) = GaussRational(1);
  return b;
}

bool conjugates_into_special(const Mat& m, const Mat& P) {
  if (m.rows() != 3 || m.cols() != 3 || P.rows() != 3 || P.cols() != 3) return false;
  const auto Pinv = try_inverse(P);
  if (!Pinv) return false;
  const Mat c = *Pinv * m * P;
  return c == c(1, 0) * special_alpha() + c(0, 1) * special_beta();
}

std::variant<Flag, SpecialForm> classify_nilpotent_2dim_M3(const OperatorSpace& N, const NilpotencyBudget& budget) {
  if (N.ambient != 3 || N.dim() != 2) throw ContractError("classify_nilpotent_2dim_M3: need a 2-dimensional subspace of M_3");
  if (!subspace_all_nilpotent(N, budget).all_nilpotent) {
    throw ContractError("classify_nilpotent_2dim_M3: space has a non-nilpotent element");
  }
  auto tri = strict_triangularize(N);
  if (auto* flag = std::get_if<Flag>(&tri)) return *flag;

  const Mat& n1 = N.basis[0];
  const Mat& n2 = N.basis[1];
  // In the special family the two images always meet in a line; its image
  // under each element, suitably scaled, completes the conjugator.
  const auto meet = intersect_spans(column_space_basis(n1), column_space_basis(n2), 3);
  if (meet.size() != 1) throw InconsistencyError("classify_nilpotent_2dim_M3: images do not meet in a line");
  const Index anchor = first_nonzero(meet.front());
  const Vec p = meet.front() / meet.front()(anchor);
  const Vec w1 = n1 * p;
  const Vec w2 = n2 * p;
  const Vec back = n1 * w2;
  const GaussRational delta = back(anchor) / p(anchor);
  if (delta.is_zero() || back != delta * p) throw InconsistencyError("classify_nilpotent_2dim_M3: degenerate pairing");
  Mat raw(3, 3);
  raw.col(0) = w1;
  raw.col(1) = p;
  raw.col(2) = w2 / delta;
  // raw sends the family onto itself with columns (-e3, e2, e1); undo that
  // normalizer element so the family itself comes back with P = I.
  Mat undo = zero_matrix<GaussRational>(3, 3);
  undo(0, 2) = GaussRational(-1);
  undo(1, 1) = GaussRational(1);
  undo(2, 0) = GaussRational(1);
  const Mat P = raw * undo;
  if (!conjugates_into_special(n1, P) || !conjugates_into_special(n2, P)) {
    throw InconsistencyError("classify_nilpotent_2dim_M3: conjugator failed to re-verify");
  }
  const Mat Pinv = inverse(P);
  return SpecialForm{P * special_alpha() * Pinv, P * special_beta() * Pinv, P};
}

std::optional<Mat> block_strict_triangularize(const GramMatrix& g) {
  const OperatorSpace slices = g.coordinate_space();
  auto tri = strict_triangularize(slices);
  const auto* flag = std::get_if<Flag>(&tri);
  if (!flag) return std::nullopt;
  Mat P = flag->as_matrix();
  const GramMatrix moved = g.similar(P);
  for (Index i = 0; i < g.n(); ++i) {
    for (Index j = 0; j <= i; ++j) {
      if (!is_zero_matrix(moved(i, j))) throw InconsistencyError("block_strict_triangularize: pattern failed");
    }
  }
  return P;
}

WitnessSearch search_witness(const ElementaryOperator& phi, int trials, std::uint64_t height, std::uint64_t seed) {
  WitnessSearch out;
  Rng rng(seed);
  const Index d = phi.dim();
  for (int trial = 0; trial < trials; ++trial) {
    ++out.trials_used;
    Mat x = random_matrix(rng, d, d, height);
    if (trace_powers_vanish(phi(x))) continue;
    if (is_nilpotent(phi(x))) throw InconsistencyError("search_witness: witness failed to re-verify");
    out.witness = std::move(x);
    break;
  }
  return out;
}

GradedProductResult graded_product_check(std::span<const ElementaryOperator> parts,
                                         std::span<const std::vector<Mat>> probe_tuples) {
  GradedProductResult out;
  if (parts.empty()) return out;
  const Index d = parts.front().dim();
  for (const auto& p : parts) {
    if (p.dim() != d) throw ShapeError("graded_product_check: ambient mismatch");
  }
  // phi_j(x) phi_i(y) is bilinear, so units whose images span each range
  // decide the hypothesis.
  std::vector<std::vector<Mat>> images;
  std::vector<std::vector<std::size_t>> spanning;
  for (const auto& p : parts) {
    images.push_back(images_of_units(p));
    IncrementalBasis<GaussRational> range(d * d);
    std::vector<std::size_t> chosen;
    for (std::size_t x = 0; x < images.back().size(); ++x) {
      if (range.add(vectorize(images.back()[x]))) chosen.push_back(x);
    }
    spanning.push_back(std::move(chosen));
  }
  const auto units = matrix_units<GaussRational>(d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      for (std::size_t x : spanning[j]) {
        for (std::size_t y : spanning[i]) {
          if (!is_zero_matrix(images[j][x] * images[i][y])) {
            out.holds = false;
            out.failure = "phi_" + std::to_string(j + 1) + "(x) phi_" + std::to_string(i + 1) + "(y) != 0";
            out.witness = {units[x], units[y]};
            return out;
          }
        }
      }
    }
  }
  std::vector<CoefficientPair> all;
  for (const auto& p : parts) all.insert(all.end(), p.pairs().begin(), p.pairs().end());
  const ElementaryOperator sum(d, std::move(all));
  const std::size_t length = parts.size() + 1;
  for (const auto& tuple : probe_tuples) {
    if (tuple.size() != length) throw ShapeError("graded_product_check: probe tuple must have parts + 1 entries");
    Mat product = identity_matrix<GaussRational>(d);
    for (const auto& x : tuple) product = product * sum(x);
    if (!is_zero_matrix(product)) {
      out.holds = false;
      out.failure = "product of " + std::to_string(length) + " values is nonzero";
      out.witness = tuple;
      return out;
    }
  }
  return out;
}

}  // namespace elemop
