#include "elemop/classifier/classifier.hpp"

#include <array>
#include <utility>

namespace elemop {

namespace {

constexpr std::array<std::pair<Status, const char*>, 3> kStatusNames{{
    {Status::LQN, "LQN"},
    {Status::NotLQN, "NotLQN"},
    {Status::Unknown, "Unknown"},
}};

constexpr std::array<std::pair<Form, const char*>, 6> kFormNames{{
    {Form::None, "none"},
    {Form::PatternI, "Pattern-I"},
    {Form::SpecialII, "Special-II"},
    {Form::SpecialIII, "Special-III"},
    {Form::Length2Zeros, "Length2-Zeros"},
    {Form::DimV1Block, "DimV1-Block"},
}};

// The minimal representation to work with, and whether it is the input
// itself (then conjugators relate to the caller's pairs).
struct Working {
  ElementaryOperator op;
  bool is_input = false;
};

Working working_form(const ElementaryOperator& phi) {
  if (is_length_reduced(phi)) return {phi, true};
  return {minimal_length(phi).reduced, false};
}

Evidence measure(const ElementaryOperator& phi, const ClassifyOptions& opts) {
  Evidence ev;
  const LocalDimResult l = local_dimension(left_space(phi), opts.sampling);
  const LocalDimResult v = local_dimension(v_space(phi), opts.sampling);
  ev.ldim_L = l.value;
  ev.ldim_L_witness = l.witness;
  ev.ldim_V = v.value;
  ev.ldim_V_witness = v.witness;
  ev.branch = "lDimL=" + std::to_string(l.value) + ",lDimV=" + std::to_string(v.value);
  return ev;
}

ClassificationVerdict lqn(Form form, Representation rep, bool keep_P, Evidence ev) {
  ClassificationVerdict out;
  out.status = Status::LQN;
  out.form = form;
  if (!keep_P) rep.P.reset();
  out.representation = std::move(rep);
  out.evidence = std::move(ev);
  return out;
}

// NotLQN with a searched witness, or Unknown naming the stalled branch.
ClassificationVerdict refute(const ElementaryOperator& phi, const ClassifyOptions& opts, Evidence ev,
                             const std::string& stalled) {
  ClassificationVerdict out;
  const WitnessSearch search =
      search_witness(phi, opts.witness_trials, opts.witness_height, Rng::derive(opts.budget.seed, 0x5eed));
  ev.trials += search.trials_used;
  if (search.witness) {
    out.status = Status::NotLQN;
    out.witness = search.witness;
    ev.branch += ";" + stalled + ";witness";
  } else {
    out.status = Status::Unknown;
    ev.branch += ";" + stalled + ";witness search exhausted";
  }
  out.evidence = std::move(ev);
  return out;
}

// tr(phi(S^*)) = tr(S^* S) > 0 when S = sum b_i a_i != 0.
std::optional<ClassificationVerdict> trace_refutation(const ElementaryOperator& phi, Evidence& ev) {
  const Mat s = sum_bi_ai(phi);
  if (is_zero_matrix(s)) return std::nullopt;
  ClassificationVerdict out;
  out.status = Status::NotLQN;
  out.witness = adjoint(s);
  if (is_nilpotent(phi(*out.witness))) throw InconsistencyError("classify: trace witness failed to re-verify");
  ev.branch += ";sum b_i a_i != 0";
  out.evidence = ev;
  return out;
}

Mat reversal(Index n) {
  Mat r = zero_matrix<GaussRational>(n, n);
  for (Index i = 0; i < n; ++i) r(i, n - 1 - i) = GaussRational(1);
  return r;
}

std::optional<Index> anchor_of(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return i * m.cols() + j;
    }
  }
  return std::nullopt;
}

// Rank-one parameters of [[0,B,0],[A,0,B],[0,-A,0]], if the blocks have
// the shape of one of the two exceptional forms.
std::optional<std::pair<Form, FormParameters>> special_parameters(const Mat& A, const Mat& B) {
  if (rank(A) != 1 || rank(B) != 1) return std::nullopt;
  const RankOne a = rank_one_factor(A);
  const RankOne b = rank_one_factor(B);
  FormParameters params;
  if (a.functional == b.functional) {
    params.zeta0 = a.column;
    params.zeta1 = b.column;
    params.f = a.functional;
    return std::pair{Form::SpecialII, params};
  }
  // columns parallel: B = c zeta0 g'^T
  const Index k = [&] {
    Index i = 0;
    while (a.column(i).is_zero()) ++i;
    return i;
  }();
  const GaussRational c = b.column(k) / a.column(k);
  if (b.column != c * a.column) return std::nullopt;
  params.zeta0 = a.column;
  params.f = a.functional;
  params.g = Vec(c * b.functional);
  return std::pair{Form::SpecialIII, params};
}

}  // namespace

std::string to_string(Status s) {
  for (const auto& [k, name] : kStatusNames) {
    if (k == s) return name;
  }
  return "Unknown";
}

std::string to_string(Form f) {
  for (const auto& [k, name] : kFormNames) {
    if (k == f) return name;
  }
  return "none";
}

std::optional<Status> parse_status(const std::string& s) {
  for (const auto& [k, name] : kStatusNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

std::optional<Form> parse_form(const std::string& s) {
  for (const auto& [k, name] : kFormNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

bool necessary_trace_condition(const ElementaryOperator& phi) { return is_zero_matrix(sum_bi_ai(phi)); }

ClassificationVerdict classify_length2(const ElementaryOperator& phi, const ClassifyOptions& opts) {
  const Working w = working_form(phi);
  const Index n = w.op.size();
  if (n > 2) throw ContractError("classify_length2: length " + std::to_string(n) + " > 2");
  Evidence ev = measure(phi, opts);
  if (n == 0) return lqn(Form::PatternI, Representation{}, false, ev);
  if (auto refuted = trace_refutation(w.op, ev)) return *refuted;

  if (auto P = block_strict_triangularize(gram(w.op))) {
    // reversed order puts the zeros on and above the diagonal
    ev.branch += ";block flag";
    return lqn(Form::Length2Zeros, similarity_transform(w.op, *P * reversal(n)), w.is_input, ev);
  }
  return refute(w.op, opts, ev, "no block flag");
}

std::optional<Representation> construct_triangular_rep(const ElementaryOperator& phi) {
  if (!is_length_reduced(phi)) throw ContractError("construct_triangular_rep: operator is not length-reduced");
  if (phi.empty()) return Representation{};
  const GramMatrix g = gram(phi);
  const auto P = block_strict_triangularize(g);
  if (!P) return std::nullopt;
  const Index n = phi.size();
  const Index dim_v = g.coordinate_space().dim();
  if (dim_v > n * (n - 1) / 2) throw InconsistencyError("construct_triangular_rep: dim V exceeds n(n-1)/2");
  return similarity_transform(phi, *P);
}

ClassificationVerdict classify_length3(const ElementaryOperator& phi, const ClassifyOptions& opts) {
  const Working w = working_form(phi);
  if (w.op.size() != 3) throw ContractError("classify_length3: length is " + std::to_string(w.op.size()) + ", not 3");
  Evidence ev = measure(phi, opts);
  if (auto refuted = trace_refutation(w.op, ev)) return *refuted;

  const GramMatrix g = gram(w.op);
  const OperatorSpace slices = g.coordinate_space();
  if (auto P = block_strict_triangularize(g)) {
    ev.branch += ";triangular slices";
    return lqn(Form::PatternI, similarity_transform(w.op, *P), w.is_input, ev);
  }
  const NilpotentSpaceReport report = subspace_all_nilpotent(slices, opts.budget);
  if (!report.all_nilpotent) return refute(w.op, opts, ev, "slice space not nilpotent");
  if (slices.dim() != 2) return refute(w.op, opts, ev, "slice space of dim " + std::to_string(slices.dim()));

  const auto split = classify_nilpotent_2dim_M3(slices, opts.budget);
  const auto* special = std::get_if<SpecialForm>(&split);
  if (!special) throw InconsistencyError("classify_length3: triangularizable slices escaped the block flag");
  const GramMatrix moved = g.similar(special->conjugator);
  const Mat& A = moved(1, 0);
  const Mat& B = moved(0, 1);
  auto found = special_parameters(A, B);
  if (!found) return refute(w.op, opts, ev, "special slices with non-rank-one blocks");
  ev.branch += ";special slices";
  auto out = lqn(found->first, similarity_transform(w.op, special->conjugator), w.is_input, ev);
  out.parameters = found->second;
  return out;
}

ClassificationVerdict classify(const ElementaryOperator& phi, const ClassifyOptions& opts) {
  const Index n = minimal_length(phi).length;
  if (n > 3) throw UnsupportedError("classify: length " + std::to_string(n) + " is above 3");
  return n == 3 ? classify_length3(phi, opts) : classify_length2(phi, opts);
}

ClassificationVerdict structure_dimV1(const ElementaryOperator& phi, const ClassifyOptions& opts) {
  const Working w = working_form(phi);
  const ElementaryOperator& op = w.op;
  const OperatorSpace V = v_space(op);
  if (V.dim() != 1) throw ContractError("structure_dimV1: dim V is " + std::to_string(V.dim()) + ", not 1");
  const Index n = op.size();
  const Index d = op.dim();
  Evidence ev = measure(phi, opts);
  if (auto refuted = trace_refutation(op, ev)) return *refuted;

  const OperatorSpace L = left_space(op);
  const Index r = local_dimension(L, opts.sampling).value;
  const std::array<OperatorSpace, 2> spaces{L, V};
  const std::array<Index, 2> targets{r, 1};
  const SeparatingSearch sep = simultaneous_separating_vector(spaces, targets, opts.sampling);
  if (!sep.vector) {
    ClassificationVerdict out;
    ev.branch += ";dimV1: no common separating vector";
    out.evidence = ev;
    return out;
  }
  const Vec& zeta = *sep.vector;

  Mat az(d, n);
  for (Index j = 0; j < n; ++j) az.col(j) = op.a(j) * zeta;
  const auto kernel = kernel_basis(az);
  const Mat completed = complete_basis(kernel, n);
  const Index k = static_cast<Index>(kernel.size());
  Mat P(n, n);
  P << completed.rightCols(n - k), completed.leftCols(k);

  // every block is C(i, j) W for the single basis matrix W of V
  const Mat& W = V.basis.front();
  const Index anchor = *anchor_of(W);
  const GramMatrix g = gram(op);
  Mat C(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) C(i, j) = g(i, j)(anchor / d, anchor % d) / W(anchor / d, anchor % d);
  }
  const Mat moved = inverse(P) * C * P;
  const Mat top = moved.topLeftCorner(r, r);
  if (!is_zero_matrix(moved.rightCols(n - r)) || !is_nilpotent(top)) {
    return refute(op, opts, ev, "dimV1: block shape fails");
  }
  const std::vector<Mat> one{top};
  const auto tri = strict_triangularize(reduce_basis(one, r));
  const Mat F = std::get<Flag>(tri).as_matrix();
  Mat lift = identity_matrix<GaussRational>(n);
  lift.topLeftCorner(r, r) = F;
  ev.branch += ";dimV1 block";
  auto out = lqn(Form::DimV1Block, similarity_transform(op, P * lift), w.is_input, ev);
  out.parameters.r = r;
  out.parameters.zeta0 = zeta;
  return out;
}

Index dim_phi_x_squared_range(const ElementaryOperator& phi, const Mat& x) {
  const Mat y = phi(x);
  return rank(Mat(y * y));
}

int certified_exponent(const ClassificationVerdict& verdict) {
  if (verdict.status != Status::LQN || !verdict.representation) return 0;
  const auto n = static_cast<int>(verdict.representation->size());
  switch (verdict.form) {
    case Form::PatternI:
    case Form::Length2Zeros:
      return n + 1;
    case Form::SpecialII:
    case Form::SpecialIII:
      return 5;
    case Form::DimV1Block:
      return static_cast<int>(verdict.parameters.r.value_or(0)) + 2;
    case Form::None:
      break;
  }
  return 0;
}

}  // namespace elemop
