#include "elemop/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "elemop/io/json_io.hpp"

namespace elemop::cli {

namespace {

using io::Json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  int trials = 200;
};

std::string row_text(const Mat& m, Index i) {
  std::string s = "[";
  for (Index k = 0; k < m.cols(); ++k) s += (k ? " " : "") + m(i, k).str();
  return s + "]";
}

void print_matrix(std::ostream& out, const Mat& m, const std::string& indent) {
  for (Index i = 0; i < m.rows(); ++i) out << indent << row_text(m, i) << "\n";
}

std::string vector_text(const Vec& v) { return row_text(Mat(v.transpose()), 0); }

io::InstanceFile load_instance(const std::string& path) {
  return io::instance_from_json(io::parse_json(io::read_file(path), path));
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

int analyze(const Globals& g, const std::string& path, std::ostream& out) {
  const io::InstanceFile inst = load_instance(path);
  const LengthReduction red = minimal_length(inst.op);
  const ElementaryOperator& op = red.reduced;
  const SamplingOptions sampling{g.seed, 32, 100, 16};
  struct Row {
    const char* name;
    OperatorSpace space;
  };
  const Row rows[] = {{"L", left_space(op)}, {"R", right_space(op)}, {"V", v_space(op)}};
  const Mat s = sum_bi_ai(inst.op);
  const GramMatrix gm = gram(op);

  if (g.json) {
    Json spaces = Json::object();
    for (const auto& r : rows) {
      const LocalDimResult ld = local_dimension(r.space, sampling);
      spaces[r.name] = {{"dim", r.space.dim()},
                        {"ldim", ld.value},
                        {"ldim_exact", ld.exact},
                        {"witness", io::vector_json(ld.witness)}};
    }
    Json blocks = Json::array();
    for (Index i = 0; i < gm.n(); ++i) {
      Json row = Json::array();
      for (Index j = 0; j < gm.n(); ++j) row.push_back(io::matrix_json(gm(i, j)));
      blocks.push_back(row);
    }
    const Json report{{"dim", inst.op.dim()},     {"length", red.length},       {"spaces", spaces},
                      {"sum_bi_ai", io::matrix_json(s)}, {"trace_condition", is_zero_matrix(s)},
                      {"gram", blocks}};
    out << io::dump(report);
    return kSuccess;
  }
  out << "dimension: " << inst.op.dim() << "\n";
  out << "length: " << red.length << "\n";
  for (const auto& r : rows) {
    const LocalDimResult ld = local_dimension(r.space, sampling);
    out << r.name << ": dim " << r.space.dim() << ", lDim " << ld.value << (ld.exact ? "" : " (lower bound)")
        << ", witness " << vector_text(ld.witness) << "\n";
  }
  out << "sum b_i a_i" << (is_zero_matrix(s) ? " = 0" : ":") << "\n";
  if (!is_zero_matrix(s)) print_matrix(out, s, "  ");
  for (Index i = 0; i < gm.n(); ++i) {
    for (Index j = 0; j < gm.n(); ++j) {
      out << "gram (" << i + 1 << "," << j + 1 << "):\n";
      print_matrix(out, gm(i, j), "  ");
    }
  }
  return kSuccess;
}

int exit_for(Status s) {
  switch (s) {
    case Status::LQN:
      return kSuccess;
    case Status::NotLQN:
      return kRefuted;
    case Status::Unknown:
      break;
  }
  return kUnknown;
}

int classify_cmd(const Globals& g, const std::string& path, const std::string& out_path, std::ostream& out) {
  const io::InstanceFile inst = load_instance(path);
  ClassifyOptions opts;
  opts.budget.seed = g.seed;
  opts.budget.grid_evaluations = g.budget;
  opts.sampling.seed = g.seed;
  opts.witness_trials = g.trials;
  io::CertificateFile cert;
  cert.instance_digest = io::instance_digest(inst);
  cert.verdict = classify(inst.op, opts);
  emit(out, out_path, io::dump(io::certificate_json(cert)));
  if (!out_path.empty()) {
    const auto& v = cert.verdict;
    if (g.json) {
      out << io::dump(Json{{"status", to_string(v.status)}, {"form", to_string(v.form)}, {"certificate", out_path}});
    } else {
      out << to_string(v.status) << (v.form == Form::None ? "" : " " + to_string(v.form)) << " (" << v.evidence.branch
          << ")\n";
    }
  }
  return exit_for(cert.verdict.status);
}

int generate_cmd(const Globals& g, const std::string& form_name, Index n, Index d, const std::string& out_path,
                 std::ostream& out) {
  const auto form = parse_generator_form(form_name);
  if (!form) throw ParseError("--form: unknown form '" + form_name + "'");
  io::InstanceFile inst;
  inst.op = generate(*form, n, d, g.seed);
  inst.metadata = {{"generator", form_name}, {"n", n}, {"dim", d}, {"seed", g.seed}};
  emit(out, out_path, io::dump(io::instance_json(inst)));
  return kSuccess;
}

int verify_cmd(const Globals& g, const std::string& instance_path, const std::string& cert_path, std::ostream& out) {
  const io::InstanceFile inst = load_instance(instance_path);
  const io::CertificateFile cert = io::certificate_from_json(io::parse_json(io::read_file(cert_path), cert_path));
  VerificationResult r;
  if (cert.instance_digest != io::instance_digest(inst)) {
    r = {false, "instance digest mismatch"};
  } else {
    r = verify_certificate(inst.op, cert.verdict);
  }
  if (g.json) {
    Json report{{"ok", r.ok}};
    if (!r.ok) report["failed_check"] = r.failed_check;
    out << io::dump(report);
  } else {
    out << (r.ok ? std::string("certificate ok") : "certificate rejected: " + r.failed_check) << "\n";
  }
  return r.ok ? kSuccess : kRefuted;
}

int oracle_cmd(const Globals& g, const std::string& path, std::ostream& out) {
  const io::InstanceFile inst = load_instance(path);
  AllXOptions opts;
  opts.structural = false;
  opts.grid = false;
  opts.budget.seed = g.seed;
  opts.budget.random_trials = g.trials;
  const AllXVerdict v = all_x_nilpotent(inst.op, opts);
  if (const auto* r = std::get_if<Refuted>(&v)) {
    const Poly p = char_poly(inst.op(r->witness));
    if (g.json) {
      out << io::dump(Json{{"result", "refuted"},
                           {"trial", r->trial},
                           {"witness", io::matrix_json(r->witness)},
                           {"char_poly", p.str("t")}});
    } else {
      out << "witness found at trial " << r->trial << "\n";
      print_matrix(out, r->witness, "  ");
      out << "char poly of phi(x): " << p.str("t") << "\n";
    }
    return kRefuted;
  }
  const int trials = std::holds_alternative<ProbablyNilpotent>(v) ? std::get<ProbablyNilpotent>(v).trials : 0;
  if (g.json) {
    out << io::dump(Json{{"result", std::holds_alternative<Certified>(v) ? "certified" : "no witness"}, {"trials", trials}});
  } else if (std::holds_alternative<Certified>(v)) {
    out << "zero operator: nilpotent\n";
  } else {
    out << "no witness in " << trials << " trials\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of elementary operators on square matrices", "elemop"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--budget", g.budget, "Exact-grid evaluation budget")->check(CLI::PositiveNumber);
  app.add_option("--trials", g.trials, "Random trials for witness searches")->check(CLI::NonNegativeNumber);

  std::string instance, certificate, out_path, form = "i";
  Index n = 3, dim = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Lengths, spaces, local dimensions and the Gram matrix");
  analyze_cmd->add_option("instance", instance)->required();
  auto* classify_sub = app.add_subcommand("classify", "Classify (length <= 3) and write a certificate");
  classify_sub->add_option("instance", instance)->required();
  classify_sub->add_option("-o,--out", out_path, "Certificate path (default: stdout)");
  auto* generate_sub = app.add_subcommand("generate", "Write a generated instance");
  generate_sub->add_option("--form", form, "i, ii, iii, remark45, random or dimv1")->required();
  generate_sub->add_option("--n", n, "Length");
  generate_sub->add_option("--dim", dim, "Matrix size")->required();
  generate_sub->add_option("-o,--out", out_path, "Instance path (default: stdout)");
  auto* verify_sub = app.add_subcommand("verify", "Check a certificate against its instance");
  verify_sub->add_option("instance", instance)->required();
  verify_sub->add_option("certificate", certificate)->required();
  auto* oracle_sub = app.add_subcommand("oracle", "Randomized search for x with phi(x) not nilpotent");
  oracle_sub->add_option("instance", instance)->required();
  for (auto* sub : {analyze_cmd, classify_sub, generate_sub, verify_sub, oracle_sub}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(g, instance, out);
    if (classify_sub->parsed()) return classify_cmd(g, instance, out_path, out);
    if (generate_sub->parsed()) return generate_cmd(g, form, n, dim, out_path, out);
    if (verify_sub->parsed()) return verify_cmd(g, instance, certificate, out);
    if (oracle_sub->parsed()) return oracle_cmd(g, instance, out);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InconsistencyError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace elemop::cli
