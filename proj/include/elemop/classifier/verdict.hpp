#pragma once

#include <optional>
#include <string>

#include "elemop/exact.hpp"
#include "elemop/operator/elementary_operator.hpp"

namespace elemop {

enum class Status { LQN, NotLQN, Unknown };

enum class Form {
  None,
  PatternI,      // v_i u_j = 0 for i >= j
  SpecialII,     // Gram built from zeta0, zeta1 and one functional f
  SpecialIII,    // Gram built from one vector zeta0 and functionals f, g
  Length2Zeros,  // ba = dc = bc = 0 for pairs (a, b), (c, d)
  DimV1Block,    // [[T, 0], [*, 0]] with T strictly upper of order r
};

struct FormParameters {
  std::optional<Vec> zeta0;
  std::optional<Vec> zeta1;
  std::optional<Vec> f;
  std::optional<Vec> g;
  std::optional<Index> r;
};

struct Evidence {
  std::string branch;
  std::optional<Index> ldim_L;
  std::optional<Vec> ldim_L_witness;
  std::optional<Index> ldim_V;
  std::optional<Vec> ldim_V_witness;
  int trials = 0;  // witness-search draws spent
};

struct ClassificationVerdict {
  Status status = Status::Unknown;
  Form form = Form::None;
  std::optional<Representation> representation;
  std::optional<Mat> witness;
  FormParameters parameters;
  Evidence evidence;
};

std::string to_string(Status s);
std::string to_string(Form f);
/// Inverse of to_string; nullopt on unknown names.
std::optional<Status> parse_status(const std::string& s);
std::optional<Form> parse_form(const std::string& s);

}  // namespace elemop
