#pragma once

#include <json.hpp>
#include <string>

#include "elemop/classifier/classifier.hpp"

namespace elemop::io {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolchain = "elemop 0.1.0";

/// Real values as "p/q" (or "p"), others as ["re", "im"].
Json scalar_json(const GaussRational& z);
/// Accepts the forms above plus JSON integers; `where` names the entry in
/// error messages.
GaussRational scalar_from_json(const Json& j, const std::string& where);

Json matrix_json(const Mat& m);  // array of rows
Mat matrix_from_json(const Json& j, const std::string& where);
Json vector_json(const Vec& v);
Vec vector_from_json(const Json& j, const std::string& where);

Json operator_json(const ElementaryOperator& phi);
ElementaryOperator operator_from_json(const Json& j, const std::string& where = "operator");

struct InstanceFile {
  ElementaryOperator op;
  Json metadata = Json::object();
};

Json instance_json(const InstanceFile& f);
InstanceFile instance_from_json(const Json& j);

Json verdict_json(const ClassificationVerdict& v);
ClassificationVerdict verdict_from_json(const Json& j, const std::string& where = "verdict");

struct CertificateFile {
  std::string instance_digest;
  ClassificationVerdict verdict;
  std::string toolchain = kToolchain;
};

Json certificate_json(const CertificateFile& c);
CertificateFile certificate_from_json(const Json& j);

/// "sha256:<hex>" of the canonical (parsed and re-serialized) instance.
std::string instance_digest(const InstanceFile& f);

/// ParseError with the source name on malformed JSON.
Json parse_json(const std::string& text, const std::string& source);
/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace elemop::io
