#include "elemop/io/json_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace elemop::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; });
    if (!known) fail(where, "unknown field '" + key + "'");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string child(const std::string& where, const std::string& key) { return where + "." + key; }
std::string item(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

mpq_class part_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number_float()) fail(where, "decimal literal " + j.dump() + " rejected; write an exact fraction string");
  if (!j.is_string()) fail(where, "expected a rational string");
  const auto& text = j.get_ref<const std::string&>();
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    fail(where, "bad rational '" + text + "' (" + e.what() + ")");
  }
}

Index as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return static_cast<Index>(j.get<long>());
}

std::string to_hex(const unsigned char* bytes, unsigned len) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += digits[bytes[i] >> 4];
    out += digits[bytes[i] & 0xf];
  }
  return out;
}

std::vector<Mat> matrix_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of matrices");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(matrix_from_json(j[i], item(where, i)));
  return out;
}

Json matrix_list_json(const std::vector<Mat>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

}  // namespace

Json scalar_json(const GaussRational& z) {
  if (z.is_real()) return rational_string(z.real());
  return Json::array({rational_string(z.real()), rational_string(z.imag())});
}

GaussRational scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) fail(where, "complex entries are [re, im]");
    return GaussRational(part_from_json(j[0], item(where, 0)), part_from_json(j[1], item(where, 1)));
  }
  return GaussRational(part_from_json(j, where));
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(where, "rows must be non-empty arrays");
  Mat m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(item(where, i), "ragged row");
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Index>(i), static_cast<Index>(k)) = scalar_from_json(j[i][k], item(item(where, i), k));
    }
  }
  return m;
}

Json vector_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
  return out;
}

Vec vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json(j[i], item(where, i));
  return v;
}

Json operator_json(const ElementaryOperator& phi) {
  Json pairs = Json::array();
  for (const auto& p : phi.pairs()) pairs.push_back({{"a", matrix_json(p.a)}, {"b", matrix_json(p.b)}});
  return {{"dim", phi.dim()}, {"pairs", pairs}};
}

ElementaryOperator operator_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"dim", "pairs"});
  const Index d = as_index(field(j, "dim", where), child(where, "dim"));
  const Json& pairs = field(j, "pairs", where);
  if (!pairs.is_array()) fail(child(where, "pairs"), "expected an array");
  std::vector<CoefficientPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = item(child(where, "pairs"), i);
    require_object(pairs[i], at, {"a", "b"});
    out.push_back({matrix_from_json(field(pairs[i], "a", at), child(at, "a")),
                   matrix_from_json(field(pairs[i], "b", at), child(at, "b"))});
  }
  return ElementaryOperator(d, std::move(out));
}

Json instance_json(const InstanceFile& f) {
  return {{"schema_version", kSchemaVersion}, {"operator", operator_json(f.op)}, {"metadata", f.metadata}};
}

InstanceFile instance_from_json(const Json& j) {
  require_object(j, "instance", {"schema_version", "operator", "metadata"});
  const Json& version = field(j, "schema_version", "instance");
  if (version != kSchemaVersion) fail("instance.schema_version", "unsupported version " + version.dump());
  InstanceFile f;
  f.op = operator_from_json(field(j, "operator", "instance"), "operator");
  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("instance.metadata", "expected an object");
    f.metadata = *it;
  }
  return f;
}

Json verdict_json(const ClassificationVerdict& v) {
  Json out{{"status", to_string(v.status)}, {"form", to_string(v.form)}};
  if (v.representation) {
    Json rep{{"u", matrix_list_json(v.representation->u)}, {"v", matrix_list_json(v.representation->v)}};
    if (v.representation->P) rep["P"] = matrix_json(*v.representation->P);
    out["representation"] = rep;
  }
  if (v.witness) out["witness"] = matrix_json(*v.witness);
  Json params = Json::object();
  const auto& p = v.parameters;
  if (p.zeta0) params["zeta0"] = vector_json(*p.zeta0);
  if (p.zeta1) params["zeta1"] = vector_json(*p.zeta1);
  if (p.f) params["f"] = vector_json(*p.f);
  if (p.g) params["g"] = vector_json(*p.g);
  if (p.r) params["r"] = *p.r;
  out["parameters"] = params;
  const auto& e = v.evidence;
  Json ev{{"branch", e.branch}, {"trials", e.trials}};
  if (e.ldim_L) ev["ldim_L"] = *e.ldim_L;
  if (e.ldim_L_witness) ev["ldim_L_witness"] = vector_json(*e.ldim_L_witness);
  if (e.ldim_V) ev["ldim_V"] = *e.ldim_V;
  if (e.ldim_V_witness) ev["ldim_V_witness"] = vector_json(*e.ldim_V_witness);
  out["evidence"] = ev;
  return out;
}

ClassificationVerdict verdict_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"status", "form", "representation", "witness", "parameters", "evidence"});
  ClassificationVerdict v;
  const Json& status = field(j, "status", where);
  const auto s = status.is_string() ? parse_status(status.get<std::string>()) : std::nullopt;
  if (!s) fail(child(where, "status"), "unknown status " + status.dump());
  v.status = *s;
  const Json& form = field(j, "form", where);
  const auto f = form.is_string() ? parse_form(form.get<std::string>()) : std::nullopt;
  if (!f) fail(child(where, "form"), "unknown form " + form.dump());
  v.form = *f;
  if (const auto it = j.find("representation"); it != j.end()) {
    const std::string at = child(where, "representation");
    require_object(*it, at, {"u", "v", "P"});
    Representation rep;
    rep.u = matrix_list(field(*it, "u", at), child(at, "u"));
    rep.v = matrix_list(field(*it, "v", at), child(at, "v"));
    if (const auto p = it->find("P"); p != it->end()) rep.P = matrix_from_json(*p, child(at, "P"));
    v.representation = std::move(rep);
  }
  if (const auto it = j.find("witness"); it != j.end()) v.witness = matrix_from_json(*it, child(where, "witness"));
  if (const auto it = j.find("parameters"); it != j.end()) {
    const std::string at = child(where, "parameters");
    require_object(*it, at, {"zeta0", "zeta1", "f", "g", "r"});
    auto& p = v.parameters;
    if (it->contains("zeta0")) p.zeta0 = vector_from_json((*it)["zeta0"], child(at, "zeta0"));
    if (it->contains("zeta1")) p.zeta1 = vector_from_json((*it)["zeta1"], child(at, "zeta1"));
    if (it->contains("f")) p.f = vector_from_json((*it)["f"], child(at, "f"));
    if (it->contains("g")) p.g = vector_from_json((*it)["g"], child(at, "g"));
    if (it->contains("r")) p.r = as_index((*it)["r"], child(at, "r"));
  }
  if (const auto it = j.find("evidence"); it != j.end()) {
    const std::string at = child(where, "evidence");
    require_object(*it, at, {"branch", "trials", "ldim_L", "ldim_L_witness", "ldim_V", "ldim_V_witness"});
    auto& e = v.evidence;
    if (it->contains("branch")) {
      if (!(*it)["branch"].is_string()) fail(child(at, "branch"), "expected a string");
      e.branch = (*it)["branch"].get<std::string>();
    }
    if (it->contains("trials")) e.trials = static_cast<int>(as_index((*it)["trials"], child(at, "trials")));
    if (it->contains("ldim_L")) e.ldim_L = as_index((*it)["ldim_L"], child(at, "ldim_L"));
    if (it->contains("ldim_L_witness")) e.ldim_L_witness = vector_from_json((*it)["ldim_L_witness"], child(at, "ldim_L_witness"));
    if (it->contains("ldim_V")) e.ldim_V = as_index((*it)["ldim_V"], child(at, "ldim_V"));
    if (it->contains("ldim_V_witness")) e.ldim_V_witness = vector_from_json((*it)["ldim_V_witness"], child(at, "ldim_V_witness"));
  }
  return v;
}

Json certificate_json(const CertificateFile& c) {
  return {{"schema_version", kSchemaVersion},
          {"instance_digest", c.instance_digest},
          {"verdict", verdict_json(c.verdict)},
          {"toolchain", c.toolchain}};
}

CertificateFile certificate_from_json(const Json& j) {
  require_object(j, "certificate", {"schema_version", "instance_digest", "verdict", "toolchain"});
  const Json& version = field(j, "schema_version", "certificate");
  if (version != kSchemaVersion) fail("certificate.schema_version", "unsupported version " + version.dump());
  CertificateFile c;
  const Json& digest = field(j, "instance_digest", "certificate");
  if (!digest.is_string()) fail("certificate.instance_digest", "expected a string");
  c.instance_digest = digest.get<std::string>();
  c.verdict = verdict_from_json(field(j, "verdict", "certificate"));
  if (const auto it = j.find("toolchain"); it != j.end() && it->is_string()) c.toolchain = it->get<std::string>();
  return c;
}

std::string instance_digest(const InstanceFile& f) {
  const std::string canonical = instance_json(f).dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), hash, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("instance_digest: SHA-256 failed");
  }
  return "sha256:" + to_hex(hash, len);
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": invalid JSON (" + e.what() + ")");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot write");
  out << text;
}

}  // namespace elemop::io
