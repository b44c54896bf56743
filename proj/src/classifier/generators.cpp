#include <array>
#include <functional>

#include "elemop/classifier/classifier.hpp"

namespace elemop {

namespace {

constexpr std::uint64_t kHeight = 3;
constexpr int kAttempts = 64;

constexpr std::array<std::pair<GeneratorForm, const char*>, 6> kNames{{
    {GeneratorForm::I, "i"},
    {GeneratorForm::II, "ii"},
    {GeneratorForm::III, "iii"},
    {GeneratorForm::Remark45, "remark45"},
    {GeneratorForm::Random, "random"},
    {GeneratorForm::DimV1, "dimv1"},
}};

Vec nonzero_vector(Rng& rng, Index n) {
  for (;;) {
    Vec v = random_integer_vector(rng, n, kHeight);
    if (!is_zero_matrix(v)) return v;
  }
}

// u_j has image in span(q_1..q_j), v_i kills q_1..q_i.
ElementaryOperator pattern_one(Rng& rng, Index n, Index d) {
  const Mat Q = random_invertible(rng, d, kHeight);
  const Mat Qinv = inverse(Q);
  std::vector<Mat> u, v;
  for (Index j = 1; j <= n; ++j) {
    Mat uj = zero_matrix<GaussRational>(d, d);
    for (Index k = 0; k < j; ++k) uj += Q.col(k) * random_integer_vector(rng, d, kHeight).transpose();
    u.push_back(uj);
  }
  for (Index i = 1; i <= n; ++i) {
    Mat keep = zero_matrix<GaussRational>(d, d);
    for (Index k = i; k < d; ++k) keep(k, k) = GaussRational(1);
    v.push_back(random_integer_matrix(rng, d, d, kHeight) * keep * Qinv);
  }
  return ElementaryOperator::from_lists(d, u, v);
}

// Rank-one u_j = p_j h^T; v_i sends p_j to the (i, j) target vector.
ElementaryOperator special_two(Rng& rng, Index d) {
  const Mat Qb = random_invertible(rng, d, kHeight);
  const Mat Qinv = inverse(Qb);
  const Vec h = nonzero_vector(rng, d);
  Vec z0 = nonzero_vector(rng, d);
  Vec z1 = nonzero_vector(rng, d);
  const Vec zero = zero_vector<GaussRational>(d);
  const std::array<std::array<Vec, 3>, 3> targets{{
      {zero, z1, zero},
      {z0, zero, z1},
      {zero, Vec(-z0), zero},
  }};
  std::vector<Mat> u, v;
  for (Index j = 0; j < 3; ++j) u.push_back(Qb.col(j) * h.transpose());
  for (std::size_t i = 0; i < 3; ++i) {
    Mat images = random_integer_matrix(rng, d, d, kHeight);
    for (std::size_t j = 0; j < 3; ++j) images.col(static_cast<Index>(j)) = targets[i][j];
    v.push_back(images * Qinv);
  }
  return ElementaryOperator::from_lists(d, u, v);
}

// v_i = zeta0 w_i^T; u_j has prescribed w_i^T u_j.
ElementaryOperator special_three(Rng& rng, Index d) {
  const Mat Wb = random_invertible(rng, d, kHeight);
  const Mat WinvT = inverse(Wb).transpose();
  const Vec z0 = nonzero_vector(rng, d);
  const Vec f = nonzero_vector(rng, d);
  const Vec g = nonzero_vector(rng, d);
  const Vec zero = zero_vector<GaussRational>(d);
  const std::array<std::array<Vec, 3>, 3> rows{{
      {zero, g, zero},
      {f, zero, g},
      {zero, Vec(-f), zero},
  }};
  std::vector<Mat> u, v;
  for (std::size_t j = 0; j < 3; ++j) {
    Mat stacked = random_integer_matrix(rng, d, d, kHeight);
    for (std::size_t i = 0; i < 3; ++i) stacked.row(static_cast<Index>(i)) = rows[i][j].transpose();
    u.push_back(WinvT * stacked);
  }
  for (Index i = 0; i < 3; ++i) v.push_back(z0 * Wb.col(i).transpose());
  return ElementaryOperator::from_lists(d, u, v);
}

// Gram [[0,B,0],[A,0,B],[0,-A,0]] with A, B of rank two.
ElementaryOperator special_rank_two(Rng& rng, Index d) {
  const Mat Z = random_integer_matrix(rng, d, 2, kHeight);
  const Mat N = random_integer_matrix(rng, 2, d, kHeight);
  const Mat RA = random_integer_matrix(rng, 2, 2, kHeight);
  const Mat RB = random_integer_matrix(rng, 2, 2, kHeight);
  const Mat G = random_integer_matrix(rng, 2, 2, kHeight);
  Mat lift(d - 2, 2);
  lift << identity_matrix<GaussRational>(2), random_integer_matrix(rng, d - 4, 2, kHeight);
  Mat left_inverse = zero_matrix<GaussRational>(2, d - 2);
  left_inverse.leftCols(2) = identity_matrix<GaussRational>(2);

  auto stack = [&](const Mat& top, const Mat& bottom) {
    Mat m(d, d);
    m << top, bottom;
    return m;
  };
  auto side = [&](const Mat& left, const Mat& right) {
    Mat m(d, d);
    m << left, right;
    return m;
  };
  const Mat none_rows = zero_matrix<GaussRational>(d - 2, d);
  const Mat none_cols = zero_matrix<GaussRational>(d, 2);
  const std::vector<Mat> u{stack(RA * N, none_rows), stack(G * N, lift * N), stack(RB * N, none_rows)};
  const std::vector<Mat> v{side(none_cols, Z * RB * left_inverse), side(Z, -Z * G * left_inverse),
                           side(none_cols, -Z * RA * left_inverse)};
  if (rank(Mat(Z * RA * N)) != 2 || rank(Mat(Z * RB * N)) != 2) return ElementaryOperator::zero(d);
  return ElementaryOperator::from_lists(d, u, v);
}

ElementaryOperator random_pairs(Rng& rng, Index n, Index d) {
  std::vector<CoefficientPair> pairs;
  for (Index i = 0; i < n; ++i) {
    pairs.push_back({random_integer_matrix(rng, d, d, 2), random_integer_matrix(rng, d, d, 2)});
  }
  return ElementaryOperator(d, std::move(pairs));
}

// All products b_i a_j are multiples of xi eta^T, coefficient matrix
// [[T, 0], [*, 0]] with T strictly upper of order n - 1.
ElementaryOperator dim_v_one(Rng& rng, Index n, Index d) {
  const Index r = n - 1;
  const Mat Pb = random_invertible(rng, d, kHeight);
  const Mat Pinv = inverse(Pb);
  const Vec eta = nonzero_vector(rng, d);
  const Vec eta2 = nonzero_vector(rng, d);
  const Vec xi = nonzero_vector(rng, d);
  Mat C = zero_matrix<GaussRational>(n, r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = i + 1; j < r; ++j) C(i, j) = GaussRational(rng.uniform(-3, 3));
  }
  for (Index j = 1; j < r; ++j) C(n - 1, j) = GaussRational(rng.uniform(-3, 3));
  std::vector<CoefficientPair> pairs;
  std::vector<Mat> a;
  for (Index j = 0; j < r; ++j) a.push_back(Pb.col(j) * eta.transpose());
  a.push_back(Pb.col(0) * eta2.transpose());
  for (Index i = 0; i < n; ++i) {
    Vec coords(d);
    coords.head(r) = C.row(i).transpose();
    coords.tail(d - r) = random_integer_vector(rng, d - r, kHeight);
    const Vec c = Pinv.transpose() * coords;
    pairs.push_back({a[static_cast<std::size_t>(i)], xi * c.transpose()});
  }
  const ElementaryOperator plain(d, std::move(pairs));
  const Representation mixed = similarity_transform(plain, random_invertible(rng, n, 2));
  return mixed.as_operator(d);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionError("generate: " + what);
}

}  // namespace

std::optional<GeneratorForm> parse_generator_form(const std::string& name) {
  for (const auto& [form, text] : kNames) {
    if (name == text) return form;
  }
  return std::nullopt;
}

std::string to_string(GeneratorForm form) {
  for (const auto& [f, text] : kNames) {
    if (f == form) return text;
  }
  return "random";
}

ElementaryOperator generate(GeneratorForm form, Index n, Index d, std::uint64_t seed) {
  require(d >= 1 && n >= 0, "need d >= 1 and n >= 0");
  std::function<ElementaryOperator(Rng&)> draw;
  switch (form) {
    case GeneratorForm::I:
      require(n >= 1 && d >= n + 1, "form i needs n >= 1 and d >= n + 1");
      draw = [=](Rng& rng) { return pattern_one(rng, n, d); };
      break;
    case GeneratorForm::II:
      require(n == 3 && d >= 3, "form ii needs n = 3 and d >= 3");
      draw = [=](Rng& rng) { return special_two(rng, d); };
      break;
    case GeneratorForm::III:
      require(n == 3 && d >= 4, "form iii needs n = 3 and d >= 4");
      draw = [=](Rng& rng) { return special_three(rng, d); };
      break;
    case GeneratorForm::Remark45:
      require(n == 3 && d >= 4, "remark45 needs n = 3 and d >= 4");
      draw = [=](Rng& rng) { return special_rank_two(rng, d); };
      break;
    case GeneratorForm::Random:
      require(n <= d * d, "random needs n <= d^2");
      draw = [=](Rng& rng) { return random_pairs(rng, n, d); };
      break;
    case GeneratorForm::DimV1:
      require(n >= 3 && d >= n + 1, "dimv1 needs n >= 3 and d >= n + 1");
      draw = [=](Rng& rng) { return dim_v_one(rng, n, d); };
      break;
  }
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
    ElementaryOperator phi = draw(rng);
    if (phi.size() == n && minimal_length(phi).length == n) return phi;
  }
  throw InconsistencyError("generate: no draw reached the requested length");
}

}  // namespace elemop
