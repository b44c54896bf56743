// Certificate checks. Deliberately uses nothing beyond exact-core arithmetic
// and its own loops, so a bug in the search code cannot vouch for itself.

#include "elemop/classifier/classifier.hpp"

namespace elemop {

namespace {

struct Failure {
  std::string check;
};

void expect(bool ok, const std::string& check) {
  if (!ok) throw Failure{check};
}

std::string at(const std::string& name, Index i, Index j) {
  return name + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// sum_i left_i x right_i
Mat apply_pairs(const std::vector<Mat>& left, const std::vector<Mat>& right, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (std::size_t i = 0; i < left.size(); ++i) out += left[i] * x * right[i];
  return out;
}

// Image of the unit E_kl: sum_i left_i.col(k) right_i.row(l).
Mat apply_unit(const std::vector<Mat>& left, const std::vector<Mat>& right, Index k, Index l, Index d) {
  Mat out = Mat::Zero(d, d);
  for (std::size_t i = 0; i < left.size(); ++i) out += left[i].col(k) * right[i].row(l);
  return out;
}

bool square_of(const Mat& m, Index d) { return m.rows() == d && m.cols() == d; }

bool nilpotent_by_char_poly(const Mat& m) { return is_pure_power(char_poly(m)); }

void check_status_shape(const ClassificationVerdict& v) {
  switch (v.status) {
    case Status::Unknown:
      expect(!v.representation && !v.witness && v.form == Form::None, "unknown verdict carries a claim");
      break;
    case Status::NotLQN:
      expect(v.witness.has_value(), "NotLQN without witness");
      expect(!v.representation && v.form == Form::None, "NotLQN carries a representation or form");
      break;
    case Status::LQN:
      expect(v.representation.has_value(), "LQN without representation");
      expect(v.form != Form::None, "LQN without form");
      expect(!v.witness, "LQN carries a witness");
      break;
  }
}

void check_witness(const ElementaryOperator& phi, const Mat& w) {
  const Index d = phi.dim();
  expect(square_of(w, d), "witness shape");
  const Mat image = apply_pairs(phi.left_coefficients(), phi.right_coefficients(), w);
  expect(!nilpotent_by_char_poly(image), "witness: char poly of phi(x) is lambda^d");
}

void check_reconstruction(const ElementaryOperator& phi, const Representation& rep) {
  const Index d = phi.dim();
  expect(rep.u.size() == rep.v.size(), "representation: u and v differ in count");
  for (std::size_t i = 0; i < rep.u.size(); ++i) {
    expect(square_of(rep.u[i], d) && square_of(rep.v[i], d), "representation: coefficient shape");
  }
  const auto a = phi.left_coefficients();
  const auto b = phi.right_coefficients();
  for (Index k = 0; k < d; ++k) {
    for (Index l = 0; l < d; ++l) {
      expect(apply_unit(rep.u, rep.v, k, l, d) == apply_unit(a, b, k, l, d), "reconstruction at " + at("E", k, l));
    }
  }
}

void check_conjugator(const ElementaryOperator& phi, const Representation& rep) {
  const Mat& P = *rep.P;
  const auto n = static_cast<Index>(phi.size());
  expect(rep.size() == n && P.rows() == n && P.cols() == n, "P: shape");
  const auto Pinv = try_inverse(P);
  expect(Pinv.has_value(), "P: singular");
  const Index d = phi.dim();
  for (Index j = 0; j < n; ++j) {
    Mat u = Mat::Zero(d, d);
    Mat v = Mat::Zero(d, d);
    for (Index k = 0; k < n; ++k) {
      u += P(k, j) * phi.a(k);
      v += (*Pinv)(j, k) * phi.b(k);
    }
    expect(u == rep.u[static_cast<std::size_t>(j)], "P: u_" + std::to_string(j + 1) + " relation");
    expect(v == rep.v[static_cast<std::size_t>(j)], "P: v_" + std::to_string(j + 1) + " relation");
  }
}

Mat block(const Representation& rep, Index i, Index j) {
  return rep.v[static_cast<std::size_t>(i)] * rep.u[static_cast<std::size_t>(j)];
}

void check_vector(const std::optional<Vec>& v, Index d, const std::string& name) {
  expect(v.has_value(), "parameters: missing " + name);
  expect(v->size() == d, "parameters: " + name + " length");
}

void check_absent(const FormParameters& p, bool zeta0, bool zeta1, bool f, bool g, bool r) {
  expect(zeta0 || !p.zeta0, "parameters: unexpected zeta0");
  expect(zeta1 || !p.zeta1, "parameters: unexpected zeta1");
  expect(f || !p.f, "parameters: unexpected f");
  expect(g || !p.g, "parameters: unexpected g");
  expect(r || !p.r, "parameters: unexpected r");
}

Index pair_rank(const Vec& x, const Vec& y) {
  Mat m(x.size(), 2);
  m << x, y;
  return rank(m);
}

void check_exceptional(const Representation& rep, const FormParameters& p, Index d, bool second) {
  expect(rep.size() == 3, "exceptional form needs three pairs");
  Mat A, B;
  if (!second) {
    check_absent(p, true, true, true, false, false);
    check_vector(p.zeta0, d, "zeta0");
    check_vector(p.zeta1, d, "zeta1");
    check_vector(p.f, d, "f");
    expect(pair_rank(*p.zeta0, *p.zeta1) == 2, "independence of zeta0, zeta1");
    expect(!is_zero_matrix(*p.f), "f is zero");
    A = *p.zeta0 * p.f->transpose();
    B = *p.zeta1 * p.f->transpose();
  } else {
    check_absent(p, true, false, true, true, false);
    check_vector(p.zeta0, d, "zeta0");
    check_vector(p.f, d, "f");
    check_vector(p.g, d, "g");
    expect(pair_rank(*p.f, *p.g) == 2, "independence of f, g");
    expect(!is_zero_matrix(*p.zeta0), "zeta0 is zero");
    A = *p.zeta0 * p.f->transpose();
    B = *p.zeta0 * p.g->transpose();
  }
  const Mat Z = Mat::Zero(d, d);
  const Mat expected[3][3] = {{Z, B, Z}, {A, Z, B}, {Z, Mat(-A), Z}};
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      expect(block(rep, i, j) == expected[i][j], "block equation " + at("v u", i, j));
    }
  }
}

void check_dim_v_one(const Representation& rep, const FormParameters& p, Index d) {
  check_absent(p, true, false, false, false, true);
  expect(p.r.has_value(), "parameters: missing r");
  check_vector(p.zeta0, d, "zeta0");
  const Index n = rep.size();
  const Index r = *p.r;
  expect(r >= 0 && r <= n, "r out of range");
  // one common W: every block a multiple of it
  std::optional<Mat> W;
  Mat C = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Mat m = block(rep, i, j);
      if (is_zero_matrix(m)) continue;
      if (!W) W = m;
      Index pi = 0, pj = 0;
      while (W->coeff(pi, pj).is_zero()) {
        if (++pj == d) pj = 0, ++pi;
      }
      const GaussRational c = m(pi, pj) / (*W)(pi, pj);
      expect(m == c * *W, "dim V = 1: block " + at("v u", i, j) + " not proportional");
      C(i, j) = c;
    }
  }
  expect(W.has_value(), "dim V = 1: all blocks vanish");
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      // [[T, 0], [*, 0]] with T strictly upper of order r
      const bool must_vanish = j >= r || (i < r && i >= j);
      if (must_vanish) expect(C(i, j).is_zero(), "block shape at " + at("C", i, j));
    }
  }
  Mat images(d, std::max<Index>(r, 1));
  for (Index j = 0; j < n; ++j) {
    const Vec w = rep.u[static_cast<std::size_t>(j)] * *p.zeta0;
    if (j < r) {
      images.col(j) = w;
    } else {
      expect(is_zero_matrix(w), "u_" + std::to_string(j + 1) + " zeta0 != 0");
    }
  }
  if (r > 0) expect(rank(Mat(images.leftCols(r))) == r, "u_j zeta0, j <= r, dependent");
}

void check_form(const ClassificationVerdict& v, Index d) {
  const Representation& rep = *v.representation;
  const Index n = rep.size();
  const FormParameters& p = v.parameters;
  switch (v.form) {
    case Form::PatternI:
      check_absent(p, false, false, false, false, false);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j <= i; ++j) expect(is_zero_matrix(block(rep, i, j)), "zero pattern " + at("v u", i, j));
      }
      break;
    case Form::Length2Zeros:
      check_absent(p, false, false, false, false, false);
      expect(n <= 2, "length-2 form with more than two pairs");
      for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) expect(is_zero_matrix(block(rep, i, j)), "zero pattern " + at("v u", i, j));
      }
      break;
    case Form::SpecialII:
      check_exceptional(rep, p, d, false);
      break;
    case Form::SpecialIII:
      check_exceptional(rep, p, d, true);
      break;
    case Form::DimV1Block:
      check_dim_v_one(rep, p, d);
      break;
    case Form::None:
      break;
  }
}

void check_evidence(const ElementaryOperator& phi, const Evidence& ev) {
  const Index d = phi.dim();
  const auto n = static_cast<std::size_t>(phi.size());
  auto measured = [&](const Vec& zeta, bool products) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) {
      if (!products) {
        cols.push_back(phi.a(static_cast<Index>(i)) * zeta);
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) cols.push_back(phi.b(static_cast<Index>(i)) * (phi.a(static_cast<Index>(j)) * zeta));
    }
    if (cols.empty()) return Index{0};
    Mat m(d, static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Index>(k)) = cols[k];
    return rank(m);
  };
  expect(ev.ldim_L.has_value() == ev.ldim_L_witness.has_value(), "evidence: lDim L without witness");
  expect(ev.ldim_V.has_value() == ev.ldim_V_witness.has_value(), "evidence: lDim V without witness");
  if (ev.ldim_L) {
    expect(ev.ldim_L_witness->size() == d, "evidence: lDim L witness length");
    expect(measured(*ev.ldim_L_witness, false) == *ev.ldim_L, "evidence: lDim L at its witness");
  }
  if (ev.ldim_V) {
    expect(ev.ldim_V_witness->size() == d, "evidence: lDim V witness length");
    expect(measured(*ev.ldim_V_witness, true) == *ev.ldim_V, "evidence: lDim V at its witness");
  }
}

}  // namespace

VerificationResult verify_certificate(const ElementaryOperator& phi, const ClassificationVerdict& verdict) {
  try {
    check_status_shape(verdict);
    check_evidence(phi, verdict.evidence);
    if (verdict.status == Status::NotLQN) check_witness(phi, *verdict.witness);
    if (verdict.status == Status::LQN) {
      check_reconstruction(phi, *verdict.representation);
      if (verdict.representation->P) check_conjugator(phi, *verdict.representation);
      check_form(verdict, phi.dim());
    } else {
      check_absent(verdict.parameters, false, false, false, false, false);
    }
  } catch (const Failure& f) {
    return {false, f.check};
  }
  return {};
}

}  // namespace elemop
