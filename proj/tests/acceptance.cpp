// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <sstream>

#include "elemop/classifier/classifier.hpp"
#include "elemop/cli/cli.hpp"
#include "elemop/io/json_io.hpp"
#include "elemop/nilpotency/nilpotency.hpp"
#include "support.hpp"

using namespace elemop;
using namespace elemop::testing;
using elemop::io::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass || notes.size() < 8) notes.push_back("failed: " + what);
      pass = false;
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string tag(const std::string& name, std::uint64_t seed) { return name + " seed " + std::to_string(seed); }

Mat conj(const Mat& m, const Mat& Q) { return inverse(Q) * m * Q; }

bool nonnilpotent(const ElementaryOperator& phi, const Mat& x) {
  return !is_pure_power(char_poly(phi(x))) && !is_nilpotent(phi(x));
}

// Reference evaluation kept apart from the library's apply.
Mat evaluate(const ElementaryOperator& phi, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const auto& [a, b] : phi.pairs()) out += a * x * b;
  return out;
}

std::optional<Mat> oracle(const ElementaryOperator& phi, int trials, std::uint64_t seed) {
  AllXOptions o;
  o.structural = false;
  o.grid = false;
  o.budget.random_trials = trials;
  o.budget.seed = seed;
  const AllXVerdict v = all_x_nilpotent(phi, o);
  if (const auto* r = std::get_if<Refuted>(&v)) return r->witness;
  return std::nullopt;
}

// 1. pattern-(i) exponent n + 1, and its sharpness
Outcome exponent_bound() {
  Outcome out;
  int sharp_cells = 0, cells = 0;
  for (Index n = 1; n <= 4; ++n) {
    for (Index d = n + 1; d <= 6; ++d) {
      ++cells;
      bool sharp = false;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ElementaryOperator phi = generate(GeneratorForm::I, n, d, seed);
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(100 * n + d)));
        for (int t = 0; t < 50; ++t) {
          const Mat y = evaluate(phi, random_integer_matrix(rng, d, d, 3));
          const Mat yn = matrix_power(y, static_cast<int>(n));
          if (!is_zero_matrix(yn)) sharp = true;
          out.require(is_zero_matrix(Mat(yn * y)), "phi(x)^(n+1) = 0, n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + tag("i", seed));
        }
      }
      sharp_cells += sharp;
      if (!sharp) out.note("no x with phi(x)^n != 0 at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
  out.note("exponent sharp in " + std::to_string(sharp_cells) + "/" + std::to_string(cells) + " (n,d) cells");
  return out;
}

// 2. exceptional forms: fifth power, phi* phi = 0, rank phi(x)^2 <= 3
Outcome exceptional_forms() {
  Outcome out;
  Index worst = 0;
  for (const auto form : {GeneratorForm::II, GeneratorForm::III}) {
    const Index lo = form == GeneratorForm::II ? 3 : 4;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Index d = lo + static_cast<Index>(seed % static_cast<std::uint64_t>(7 - lo));
      const ElementaryOperator phi = generate(form, 3, d, seed);
      const std::string name = tag(to_string(form), seed);
      const ElementaryOperator star = adjoint_flip(phi);
      bool composed = true;
      for (Index k = 0; k < d; ++k) {
        for (Index l = 0; l < d; ++l) {
          composed = composed && is_zero_matrix(evaluate(star, evaluate(phi, matrix_unit<GaussRational>(d, k, l))));
        }
      }
      out.require(composed, "phi* phi = 0 on units, " + name);
      Rng rng(Rng::derive(seed, 2));
      for (int t = 0; t < 100; ++t) {
        const Mat y = evaluate(phi, random_integer_matrix(rng, d, d, 3));
        const Mat y2 = y * y;
        out.require(is_zero_matrix(Mat(y2 * y2 * y)), "phi(x)^5 = 0, " + name);
        const Index r = rank(y2);
        worst = std::max(worst, r);
        out.require(r <= 3, "rank phi(x)^2 <= 3, " + name);
      }
    }
  }
  out.note("largest rank of phi(x)^2 seen: " + std::to_string(worst));
  return out;
}

// Generated and random instances of length <= 3 for a seed.
ElementaryOperator corpus_instance(std::uint64_t seed, std::string& label, bool& generated) {
  const auto pick = seed % 6;
  generated = pick != 5;
  const Index small = 1 + static_cast<Index>(seed % 3);
  switch (pick) {
    case 0:
      label = "i";
      return generate(GeneratorForm::I, small, small + 1 + static_cast<Index>(seed % 2), seed);
    case 1:
      label = "ii";
      return generate(GeneratorForm::II, 3, 3 + static_cast<Index>(seed % 2), seed);
    case 2:
      label = "iii";
      return generate(GeneratorForm::III, 3, 4 + static_cast<Index>(seed % 2), seed);
    case 3:
      label = "remark45";
      return generate(GeneratorForm::Remark45, 3, 4, seed);
    case 4:
      label = "dimv1";
      return generate(GeneratorForm::DimV1, 3, 4, seed);
    default:
      label = "random";
      return generate(GeneratorForm::Random, small, 2 + static_cast<Index>(seed % 3), seed);
  }
}

// 3. certified LQN implies sum b_i a_i = 0; a nonzero sum is always refuted
Outcome trace_condition() {
  Outcome out;
  int certified = 0, nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    std::string label;
    bool generated = false;
    const ElementaryOperator phi = corpus_instance(seed, label, generated);
    const auto v = classify(phi);
    const bool zero_sum = is_zero_matrix(sum_bi_ai(phi));
    if (v.status == Status::LQN) {
      ++certified;
      out.require(zero_sum, "LQN with sum b a != 0, " + tag(label, seed));
    }
    if (!zero_sum) {
      ++nonzero;
      const auto w = oracle(phi, 200, seed);
      out.require(w && nonnilpotent(phi, *w), "oracle refutes sum b a != 0 within 200 trials, " + tag(label, seed));
    }
  }
  out.note(std::to_string(certified) + " certified LQN, " + std::to_string(nonzero) + " with nonzero sum");
  return out;
}

// 4. triangular representation recovered after scrambling
Outcome triangular_round_trip() {
  Outcome out;
  int used = 0, skipped = 0;
  for (std::uint64_t seed = 1; used < 50 && seed <= 200; ++seed) {
    const Index d = 4 + static_cast<Index>(seed % 2);
    const ElementaryOperator base = generate(GeneratorForm::I, 3, d, seed);
    if (v_space(base).dim() != 3) {
      ++skipped;
      continue;
    }
    ++used;
    Rng rng(Rng::derive(seed, 4));
    const ElementaryOperator phi = similarity_transform(base, random_invertible(rng, 3, 3)).as_operator(d);
    const std::string name = tag("i", seed);
    const auto rep = construct_triangular_rep(phi);
    out.require(rep.has_value(), "construct_triangular_rep, " + name);
    if (!rep) continue;
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j <= i; ++j) {
        out.require(is_zero_matrix(Mat(rep->v[static_cast<std::size_t>(i)] * rep->u[static_cast<std::size_t>(j)])),
                    "pattern (i) zero block, " + name);
      }
    }
    for (Index k = 0; k < d; ++k) {
      for (Index l = 0; l < d; ++l) {
        const Mat x = matrix_unit<GaussRational>(d, k, l);
        out.require(evaluate(rep->as_operator(d), x) == evaluate(phi, x), "reconstruction on units, " + name);
      }
    }
    const auto ld = local_dimension(v_space(phi), {seed});
    out.require(ld.value == 3 && evaluated_dim(v_space(phi), ld.witness) == 3, "lDim V = 3, " + name);
  }
  out.require(used == 50, "50 instances with dim V = 3");
  out.note(std::to_string(used) + " instances, " + std::to_string(skipped) + " draws skipped for dim V < 3");
  return out;
}

// 5. nilpotent spaces in M_3 and M_4, and adversarial non-nilpotent ones
Outcome gerstenhaber() {
  Outcome out;
  std::uint64_t evaluations = 0;
  for (const Index m : {Index{3}, Index{4}}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(m)));
      const Index top = m * (m - 1) / 2;
      const Index k = 1 + static_cast<Index>(seed % static_cast<std::uint64_t>(top));
      const Mat Q = random_invertible(rng, m, 3);
      std::vector<Mat> gens;
      for (Index i = 0; i < k; ++i) gens.push_back(conj(random_strict_upper(rng, m, 3), Q));
      const OperatorSpace s = reduce_basis(gens, m);
      const std::string name = "M" + std::to_string(m) + " " + tag("upper", seed);
      const auto rep = subspace_all_nilpotent(s);
      evaluations += rep.evaluations;
      out.require(rep.all_nilpotent && rep.method == CheckMethod::ExactGrid, "exact grid certifies, " + name);
      bool bound = false;
      try {
        bound = gerstenhaber_check(s);
      } catch (const Error&) {
      }
      out.require(bound, "gerstenhaber_check, " + name);
    }
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Index m = 3 + static_cast<Index>(seed % 2);
    Rng rng(Rng::derive(seed, 5));
    const Mat Q = random_invertible(rng, m, 3);
    std::vector<Mat> gens;
    switch (seed % 3) {
      case 0:  // all of the strictly upper part plus one lower unit
        for (Index i = 0; i < m; ++i) {
          for (Index j = i + 1; j < m; ++j) gens.push_back(conj(matrix_unit<GaussRational>(m, i, j), Q));
        }
        gens.push_back(conj(matrix_unit<GaussRational>(m, m - 1, 0), Q));
        break;
      case 1:  // two nilpotent generators with a non-nilpotent sum
        gens.push_back(conj(matrix_unit<GaussRational>(m, 0, 1), Q));
        gens.push_back(conj(matrix_unit<GaussRational>(m, 1, 0), Q));
        break;
      default:  // nilpotent part plus one strictly lower element
        gens.push_back(conj(random_strict_upper(rng, m, 3), Q));
        gens.push_back(conj(Mat(random_strict_upper(rng, m, 3).transpose() + matrix_unit<GaussRational>(m, m - 1, 0)), Q));
        break;
    }
    const OperatorSpace s = reduce_basis(gens, m);
    const std::string name = tag("non-nilpotent", seed);
    const auto rep = subspace_all_nilpotent(s);
    evaluations += rep.evaluations;
    out.require(!rep.all_nilpotent && rep.counterexample && s.contains(*rep.counterexample) &&
                    !is_pure_power(char_poly(*rep.counterexample)),
                "refuted with a counterexample in the space, " + name);
    bool rejected = false;
    try {
      gerstenhaber_check(s);
    } catch (const ContractError&) {
      rejected = true;
    }
    out.require(rejected, "gerstenhaber_check rejects, " + name);
  }
  out.note(std::to_string(evaluations) + " grid evaluations in total");
  return out;
}

// 6. dichotomy for two-dimensional nilpotent spaces of 3 x 3 matrices
Outcome dichotomy() {
  Outcome out;
  const OperatorSpace special = reduce_basis(std::vector<Mat>{special_alpha(), special_beta()}, 3);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(Rng::derive(seed, 6));
    const Mat Q = random_invertible(rng, 3, 4);
    const GaussRational s(rng.uniform(-3, 3)), t(rng.uniform(1, 3));
    const std::vector<Mat> gens{conj(Mat(special_alpha() + s * special_beta()), Q), conj(Mat(t * special_beta()), Q)};
    const OperatorSpace N = reduce_basis(gens, 3);
    const auto r = classify_nilpotent_2dim_M3(N);
    const auto* sf = std::get_if<SpecialForm>(&r);
    out.require(sf != nullptr, "special family conjugate classified special, " + tag("special", seed));
    if (!sf) continue;
    const auto Pinv = try_inverse(sf->conjugator);
    out.require(Pinv.has_value(), "conjugator invertible, " + tag("special", seed));
    if (!Pinv) continue;
    for (const Mat& b : N.basis) {
      out.require(special.contains(Mat(*Pinv * b * sf->conjugator)), "P^-1 N P in the special family, " + tag("special", seed));
    }
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(Rng::derive(seed, 7));
    const Mat Q = random_invertible(rng, 3, 4);
    OperatorSpace N;
    do {
      N = reduce_basis(std::vector<Mat>{conj(random_strict_upper(rng, 3, 3), Q), conj(random_strict_upper(rng, 3, 3), Q)}, 3);
    } while (N.dim() != 2);
    const auto r = classify_nilpotent_2dim_M3(N);
    const auto* flag = std::get_if<Flag>(&r);
    out.require(flag != nullptr, "triangularizable space gives a flag, " + tag("upper", seed));
    if (!flag) continue;
    const Mat F = flag->as_matrix();
    const auto Finv = try_inverse(F);
    out.require(Finv.has_value(), "flag is a basis, " + tag("upper", seed));
    if (!Finv) continue;
    for (const Mat& b : N.basis) {
      const Mat t = *Finv * b * F;
      bool strict = true;
      for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j <= i; ++j) strict = strict && t(i, j).is_zero();
      }
      out.require(strict, "F^-1 N F strictly upper, " + tag("upper", seed));
    }
  }
  return out;
}

// 7. the Gram pattern of the exceptional forms is not sufficient
Outcome gram_pattern_insufficient() {
  Outcome out;
  int worst = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index d = 4 + static_cast<Index>(seed % 3);
    const ElementaryOperator phi = generate(GeneratorForm::Remark45, 3, d, seed);
    const std::string name = tag("remark45", seed);
    out.require(necessary_trace_condition(phi), "trace condition holds, " + name);
    AllXOptions o;
    o.structural = false;
    o.grid = false;
    o.budget.random_trials = 500;
    o.budget.seed = seed;
    const AllXVerdict v = all_x_nilpotent(phi, o);
    const auto* r = std::get_if<Refuted>(&v);
    out.require(r != nullptr, "oracle refutes within 500 trials, " + name);
    if (!r) continue;
    worst = std::max(worst, r->trial);
    out.require(char_poly(evaluate(phi, r->witness)) != Poly::monomial(d), "char poly != lambda^d, " + name);
  }
  out.note("latest successful trial: " + std::to_string(worst));
  return out;
}

// 8. classifier and sampling oracle never disagree
Outcome agreement() {
  Outcome out;
  int generated_total = 0, generated_unknown = 0, unknown = 0, lqn = 0, refuted = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::string label;
    bool generated = false;
    const ElementaryOperator phi = corpus_instance(seed, label, generated);
    const std::string name = tag(label, seed);
    const auto v = classify(phi);
    generated_total += generated;
    out.require(verify_certificate(phi, v).ok, "certificate verifies, " + name);
    switch (v.status) {
      case Status::LQN: {
        ++lqn;
        const auto w = oracle(phi, 200, seed);
        out.require(!w, "LQN but the oracle found a witness, " + name);
        const int k = certified_exponent(v);
        Rng rng(Rng::derive(seed, 8));
        for (int t = 0; t < 5; ++t) {
          const Mat y = evaluate(phi, random_integer_matrix(rng, phi.dim(), phi.dim(), 3));
          out.require(is_zero_matrix(matrix_power(y, k)), "certified exponent, " + name);
        }
        break;
      }
      case Status::NotLQN: {
        ++refuted;
        if (!nonnilpotent(phi, *v.witness)) {
          const auto w = oracle(phi, 1000, seed);
          out.require(false, std::string("NotLQN witness fails to re-verify") + (w ? "" : " and 1000 trials found none") + ", " + name);
        }
        break;
      }
      case Status::Unknown:
        ++unknown;
        generated_unknown += generated;
        out.note("Unknown: " + name + (oracle(phi, 1000, seed) ? " (oracle witness)" : " (no oracle witness)"));
        break;
    }
  }
  const double rate = generated_total ? 100.0 * generated_unknown / generated_total : 0.0;
  out.require(rate < 10.0, "Unknown rate on generated forms below 10%");
  std::ostringstream s;
  s << lqn << " LQN, " << refuted << " NotLQN, " << unknown << " Unknown; Unknown rate on generated forms " << rate << "%";
  out.note(s.str());
  return out;
}

// 9. basis changes and simultaneous separating vectors
Outcome representations_and_separation() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 3);
    const Index d = 2 + static_cast<Index>(seed % 3);
    const ElementaryOperator phi = generate(GeneratorForm::Random, n, d, seed);
    Rng rng(Rng::derive(seed, 9));
    const Representation moved = similarity_transform(phi, random_invertible(rng, n, 3));
    std::vector<Mat> U;
    const Mat mix = random_invertible(rng, n, 3);
    for (Index j = 0; j < n; ++j) {
      Mat u = Mat::Zero(d, d);
      for (Index k = 0; k < n; ++k) u += mix(k, j) * phi.a(k);
      U.push_back(u);
    }
    const Representation relabelled = change_left_basis(phi, U);
    for (Index k = 0; k < d; ++k) {
      for (Index l = 0; l < d; ++l) {
        const Mat x = matrix_unit<GaussRational>(d, k, l);
        out.require(evaluate(moved.as_operator(d), x) == evaluate(phi, x), "similarity reconstructs, " + tag("random", seed));
        out.require(evaluate(relabelled.as_operator(d), x) == evaluate(phi, x), "left basis change reconstructs, " + tag("random", seed));
      }
    }
  }
  int worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(Rng::derive(seed, 10));
    const Index d = 3 + static_cast<Index>(seed % 3);
    std::vector<OperatorSpace> spaces;
    std::vector<Index> targets;
    const Index count = 1 + static_cast<Index>(seed % 3);
    for (Index s = 0; s < count; ++s) {
      const Index k = 1 + static_cast<Index>(rng.uniform(0, d - 1));
      std::vector<Mat> gens;
      for (Index i = 0; i < k; ++i) gens.push_back(random_integer_matrix(rng, d, d, 4));
      spaces.push_back(reduce_basis(gens, d));
      targets.push_back(spaces.back().dim());
    }
    if (seed % 2 == 0) {
      // locally dependent: every element kills e_1 after conjugation, lDim 1 < 2
      const Mat Q = random_invertible(rng, d, 3);
      spaces.push_back(reduce_basis(std::vector<Mat>{conj(matrix_unit<GaussRational>(d, 0, 1), Q),
                                                     conj(matrix_unit<GaussRational>(d, 0, 2), Q)}, d));
      targets.push_back(1);
    }
    SamplingOptions opts;
    opts.seed = seed;
    opts.trials = 10;
    const auto r = simultaneous_separating_vector(spaces, targets, opts);
    out.require(r.vector.has_value() && r.trials_used <= 10, "separating vector within 10 trials, " + tag("family", seed));
    if (!r.vector) continue;
    worst = std::max(worst, r.trials_used);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      Mat images(d, spaces[i].dim());
      for (Index k = 0; k < spaces[i].dim(); ++k) images.col(k) = spaces[i].basis[static_cast<std::size_t>(k)] * *r.vector;
      out.require(rank(images) == targets[i], "separating vector re-verifies, " + tag("family", seed));
    }
  }
  out.note("most trials used by a separating search: " + std::to_string(worst));
  return out;
}

// Certificates the mutations start from: every form, refutations, and a
// longer dim V = 1 certificate.
struct Sample {
  io::InstanceFile instance;
  Json certificate;
};

std::vector<Sample> certificate_pool() {
  std::vector<std::pair<ElementaryOperator, ClassificationVerdict>> raw;
  auto add = [&](const ElementaryOperator& phi) { raw.emplace_back(phi, classify(phi)); };
  add(form2_specimen());
  add(form3_specimen());
  add(generate(GeneratorForm::I, 2, 3, 1));
  add(generate(GeneratorForm::I, 3, 4, 2));
  add(generate(GeneratorForm::II, 3, 4, 3));
  add(generate(GeneratorForm::III, 3, 5, 4));
  add(generate(GeneratorForm::Remark45, 3, 4, 5));
  add(generate(GeneratorForm::Random, 2, 3, 6));
  add(generate(GeneratorForm::Random, 3, 3, 7));
  add(single(I(3), I(3)));
  const ElementaryOperator four = generate(GeneratorForm::DimV1, 4, 5, 8);
  raw.emplace_back(four, structure_dimV1(four));
  // non-reduced input: certificate without P
  const ElementaryOperator padded(3, {{E(3, 1, 2), E(3, 1, 3)}, {Mat(2 * E(3, 1, 2)), E(3, 1, 3)}});
  raw.emplace_back(padded, classify(padded));

  std::vector<Sample> pool;
  for (const auto& [phi, verdict] : raw) {
    if (!verify_certificate(phi, verdict).ok) throw InconsistencyError("pool certificate does not verify");
    io::InstanceFile inst{phi, Json::object()};
    const io::CertificateFile cert{io::instance_digest(inst), verdict, io::kToolchain};
    pool.push_back({inst, io::certificate_json(cert)});
  }
  return pool;
}

using Mutation = std::function<void(Json&)>;

Json bump(const Json& scalar) {
  return io::scalar_json(io::scalar_from_json(scalar, "entry") + GaussRational(1));
}

// Adds one to a random entry of the matrix (or vector) the mutation is
// later handed.
std::function<void(Json&)> bump_entry(Rng& rng, const Json& shape, bool matrix) {
  const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(shape.size()) - 1));
  const auto k = matrix ? static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(shape[i].size()) - 1)) : 0;
  return [i, k, matrix](Json& target) {
    Json& cell = matrix ? target[i][k] : target[i];
    cell = bump(cell);
  };
}

std::vector<std::pair<std::string, Mutation>> mutation_sites(const Sample& s, Rng& rng) {
  std::vector<std::pair<std::string, Mutation>> sites;
  const Json& v = s.certificate["verdict"];
  const std::string status = v["status"];
  const std::string form = v["form"];
  const Index d = s.instance.op.dim();

  sites.emplace_back("digest", [](Json& c) {
    std::string h = c["instance_digest"];
    h.back() = h.back() == '0' ? '1' : '0';
    c["instance_digest"] = h;
  });
  sites.emplace_back("status", [status](Json& c) {
    c["verdict"]["status"] = status == "LQN" ? "NotLQN" : status == "NotLQN" ? "LQN" : "LQN";
  });
  sites.emplace_back("form", [form](Json& c) {
    static const std::vector<std::string> names{"none", "Pattern-I", "Special-II", "Special-III", "Length2-Zeros", "DimV1-Block"};
    const auto it = std::find(names.begin(), names.end(), form);
    c["verdict"]["form"] = names[static_cast<std::size_t>((it - names.begin() + 1) % 6)];
  });
  const Json& ev = v["evidence"];
  if (ev.contains("ldim_L")) {
    sites.emplace_back("evidence lDim L", [](Json& c) { c["verdict"]["evidence"]["ldim_L"] = c["verdict"]["evidence"]["ldim_L"].get<int>() + 1; });
    sites.emplace_back("evidence lDim L witness", [d](Json& c) {
      c["verdict"]["evidence"]["ldim_L_witness"] = io::vector_json(Vec::Zero(d));
    });
  }
  if (ev.contains("ldim_V")) {
    sites.emplace_back("evidence lDim V", [](Json& c) { c["verdict"]["evidence"]["ldim_V"] = c["verdict"]["evidence"]["ldim_V"].get<int>() + 1; });
  }

  if (status == "LQN") {
    const Json& rep = v["representation"];
    const auto n = static_cast<std::int64_t>(rep["u"].size());
    for (const char* side : {"u", "v"}) {
      const auto idx = static_cast<std::size_t>(rng.uniform(0, n - 1));
      sites.emplace_back(std::string("representation ") + side,
                         [m = bump_entry(rng, rep[side][idx], true), side, idx](Json& c) {
                           m(c["verdict"]["representation"][side][idx]);
                         });
    }
    if (rep.contains("P")) {
      sites.emplace_back("representation P", [m = bump_entry(rng, rep["P"], true)](Json& c) { m(c["verdict"]["representation"]["P"]); });
    }
    sites.emplace_back("drop representation", [](Json& c) { c["verdict"].erase("representation"); });
    const Json& p = v["parameters"];
    for (const char* name : {"zeta0", "zeta1", "f", "g"}) {
      if (!p.contains(name) || form == "DimV1-Block") continue;
      sites.emplace_back(std::string("parameter ") + name,
                         [m = bump_entry(rng, p[name], false), name](Json& c) { m(c["verdict"]["parameters"][name]); });
    }
    if (p.contains("r")) {
      const int delta = rng.uniform(0, 1) ? 1 : -1;
      sites.emplace_back("parameter r", [delta](Json& c) { c["verdict"]["parameters"]["r"] = c["verdict"]["parameters"]["r"].get<int>() + delta; });
    }
  } else if (status == "NotLQN") {
    Mat replacement = Mat::Zero(d, d);
    const Index k = static_cast<Index>(rng.uniform(0, d - 1)), l = static_cast<Index>(rng.uniform(0, d - 1));
    const Mat unit = matrix_unit<GaussRational>(d, k, l);
    if (is_nilpotent(evaluate(s.instance.op, unit))) replacement = unit;
    sites.emplace_back("witness", [w = io::matrix_json(replacement)](Json& c) { c["verdict"]["witness"] = w; });
    sites.emplace_back("drop witness", [](Json& c) { c["verdict"].erase("witness"); });
    sites.emplace_back("stray parameter", [](Json& c) { c["verdict"]["parameters"]["r"] = 1; });
  }
  return sites;
}

// 10. every single-field mutation is rejected by the verify command
Outcome verifier_fuzz() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "elemop_acceptance_fuzz";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto pool = certificate_pool();
  std::vector<std::string> instance_paths;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    instance_paths.push_back((dir / ("instance" + std::to_string(i) + ".json")).string());
    io::write_file(instance_paths.back(), io::dump(io::instance_json(pool[i].instance)));
    // the unmutated certificate must pass
    const std::string cert = (dir / "clean.json").string();
    io::write_file(cert, io::dump(pool[i].certificate));
    std::ostringstream o, e;
    out.require(cli::run({"verify", instance_paths.back(), cert}, o, e) == cli::kSuccess, "clean certificate " + std::to_string(i));
  }
  std::map<std::string, int> by_site;
  std::map<int, int> by_exit;
  Rng rng(10);
  for (int k = 0; k < 500; ++k) {
    const std::size_t which = static_cast<std::size_t>(k) % pool.size();
    auto sites = mutation_sites(pool[which], rng);
    const auto& [site, mutate] = sites[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sites.size()) - 1))];
    Json mutated = pool[which].certificate;
    mutate(mutated);
    const std::string cert = (dir / "mutated.json").string();
    io::write_file(cert, io::dump(mutated));
    std::ostringstream o, e;
    const int code = cli::run({"verify", instance_paths[which], cert}, o, e);
    ++by_site[site];
    ++by_exit[code];
    out.require(code != cli::kSuccess, "mutation '" + site + "' of certificate " + std::to_string(which) + " accepted");
  }
  fs::remove_all(dir);
  std::string sites = "sites:";
  for (const auto& [name, count] : by_site) sites += " " + name + "=" + std::to_string(count);
  out.note(sites);
  std::string exits = "exit codes:";
  for (const auto& [code, count] : by_exit) exits += " " + std::to_string(code) + "x" + std::to_string(count);
  out.note(exits);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pattern-(i) exponent bound", exponent_bound},
      {"exceptional forms: fifth power, adjoint composition, rank of square", exceptional_forms},
      {"trace condition", trace_condition},
      {"triangular representation round trip", triangular_round_trip},
      {"nilpotent space checks and the dimension bound", gerstenhaber},
      {"M3 dichotomy", dichotomy},
      {"exceptional Gram pattern without nilpotency", gram_pattern_insufficient},
      {"classifier and oracle agreement", agreement},
      {"representation changes and separating vectors", representations_and_separation},
      {"verifier fuzzing", verifier_fuzz},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed << std::setprecision(1) << secs << "s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return failures;
}
