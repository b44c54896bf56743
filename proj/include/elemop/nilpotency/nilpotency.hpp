#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "elemop/exact.hpp"
#include "elemop/operator/elementary_operator.hpp"
#include "elemop/spaces/operator_space.hpp"

namespace elemop {

struct NilpotencyBudget {
  std::uint64_t grid_evaluations = 1'000'000;
  int random_trials = 200;
  std::uint64_t height = 100;
  std::uint64_t seed = 0;
};

enum class CheckMethod { ExactGrid, Randomized };

struct NilpotentSpaceReport {
  OperatorSpace space;
  bool all_nilpotent = true;
  CheckMethod method = CheckMethod::ExactGrid;
  std::optional<Mat> counterexample;  // char poly != lambda^m, re-verified
  std::uint64_t evaluations = 0;
};

/// Ordered basis whose prefix spans form the chain.
struct Flag {
  std::vector<Vec> vectors;

  Mat as_matrix() const;
};

struct NotTriangularizable {
  int stage = 0;  // 1-based stage whose common kernel was trivial
};

struct SpecialForm {
  Mat first;        // P S_alpha P^{-1}
  Mat second;       // P S_beta P^{-1}
  Mat conjugator;   // P
};

bool is_nilpotent(const Mat& m);

/// Decides whether every element of N is nilpotent via the polynomial
/// identities tr((sum t_i N_i)^p) = 0, p = 1..m.
NilpotentSpaceReport subspace_all_nilpotent(const OperatorSpace& N, const NilpotencyBudget& budget = {});

/// dim N <= m(m-1)/2 for an all-nilpotent N. ContractError when N has a
/// non-nilpotent element, InconsistencyError if the bound were exceeded.
bool gerstenhaber_check(const OperatorSpace& N, const NilpotencyBudget& budget = {});

/// Common-kernel recursion.
std::variant<Flag, NotTriangularizable> strict_triangularize(const OperatorSpace& N);

/// Every basis element maps prefix k into prefix k-1.
bool is_strict_flag(const OperatorSpace& N, const Flag& flag);

/// The two-element basis of the non-triangularizable maximal nilpotent
/// family in M_3.
Mat special_alpha();
Mat special_beta();
/// P^{-1} m P lies in span{special_alpha, special_beta}.
bool conjugates_into_special(const Mat& m, const Mat& P);

std::variant<Flag, SpecialForm> classify_nilpotent_2dim_M3(const OperatorSpace& N,
                                                           const NilpotencyBudget& budget = {});

/// P whose columns are a flag for the slice space of g; then
/// g.similar(P) has zero blocks on and below the diagonal.
std::optional<Mat> block_strict_triangularize(const GramMatrix& g);

struct Certified {
  std::string by;  // structural reason
  int exponent = 0;  // phi(x)^exponent = 0 for every x
};
struct Refuted {
  Mat witness;
  int trial = 0;  // 1-based draw that found it; 0 when not sampled
};
struct ProbablyNilpotent {
  int trials = 0;
};
using AllXVerdict = std::variant<Certified, Refuted, ProbablyNilpotent>;

struct AllXOptions {
  NilpotencyBudget budget;
  /// Try the classifier first; off for the pure sampling oracle.
  bool structural = true;
  /// Allow the deterministic grid tier.
  bool grid = true;
};

AllXVerdict all_x_nilpotent(const ElementaryOperator& phi, const AllXOptions& opts = {});

struct WitnessSearch {
  std::optional<Mat> witness;
  int trials_used = 0;
};

/// Seeded search for x with phi(x) not nilpotent.
WitnessSearch search_witness(const ElementaryOperator& phi, int trials, std::uint64_t height, std::uint64_t seed);

struct GradedProductResult {
  bool holds = true;
  std::string failure;
  std::vector<Mat> witness;  // offending probe tuple, or (x, y) units
};

/// Checks phi_j(x) phi_i(y) = 0 for j >= i on matrix units, then that the
/// product of (parts + 1) values of sum(parts) vanishes on each probe tuple.
GradedProductResult graded_product_check(std::span<const ElementaryOperator> parts,
                                         std::span<const std::vector<Mat>> probe_tuples);

}  // namespace elemop
