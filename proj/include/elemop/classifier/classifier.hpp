#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "elemop/classifier/verdict.hpp"
#include "elemop/nilpotency/nilpotency.hpp"

namespace elemop {

struct ClassifyOptions {
  NilpotencyBudget budget;  // seed and grid budget for space checks
  int witness_trials = 200;
  std::uint64_t witness_height = 10;
  SamplingOptions sampling;  // lDim evidence
};

/// sum b_i a_i = 0; false refutes local nilpotency outright.
bool necessary_trace_condition(const ElementaryOperator& phi);

/// Lengths 0, 1 and 2. ContractError for longer operators.
ClassificationVerdict classify_length2(const ElementaryOperator& phi, const ClassifyOptions& opts = {});

/// Representation with v_i u_j = 0 for i >= j, or nullopt. The operator
/// must be length-reduced.
std::optional<Representation> construct_triangular_rep(const ElementaryOperator& phi);

/// Length exactly 3 (ContractError otherwise).
ClassificationVerdict classify_length3(const ElementaryOperator& phi, const ClassifyOptions& opts = {});

/// Dispatch on the minimal length; UnsupportedError above 3.
ClassificationVerdict classify(const ElementaryOperator& phi, const ClassifyOptions& opts = {});

/// Block shape [[T, 0], [*, 0]] for operators with dim V = 1.
ClassificationVerdict structure_dimV1(const ElementaryOperator& phi, const ClassifyOptions& opts = {});

/// rank(phi(x)^2)
Index dim_phi_x_squared_range(const ElementaryOperator& phi, const Mat& x);

/// phi(x)^k = 0 for every x, as guaranteed by an LQN verdict's form.
int certified_exponent(const ClassificationVerdict& verdict);

enum class GeneratorForm { I, II, III, Remark45, Random, DimV1 };

std::optional<GeneratorForm> parse_generator_form(const std::string& name);
std::string to_string(GeneratorForm form);

/// Deterministic in (form, n, d, seed). DimensionError when infeasible:
/// form i needs d >= n + 1, ii needs n = 3 and d >= 3, iii and remark45
/// need n = 3 and d >= 4, dimv1 needs n >= 3 and d >= n + 1.
ElementaryOperator generate(GeneratorForm form, Index n, Index d, std::uint64_t seed);

struct VerificationResult {
  bool ok = true;
  std::string failed_check;
};

/// Re-checks every claim of the verdict against phi using exact-core
/// arithmetic only.
VerificationResult verify_certificate(const ElementaryOperator& phi, const ClassificationVerdict& verdict);

}  // namespace elemop
