#include "elemop/classifier/classifier.hpp"
#include "elemop/exact/grid.hpp"
#include "elemop/nilpotency/nilpotency.hpp"

namespace elemop {

namespace {

// First p in 1..top with tr(m^p) != 0, or 0.
Index first_nonzero_trace_power(const Mat& m, Index top) {
  Mat power = m;
  for (Index p = 1; p <= top; ++p) {
    if (!trace(power).is_zero()) return p;
    if (p < top) power = power * m;
  }
  return 0;
}

std::optional<AllXVerdict> structural(const ElementaryOperator& reduced, const AllXOptions& opts) {
  ClassifyOptions copts;
  copts.budget = opts.budget;
  copts.sampling.seed = opts.budget.seed;
  const Index n = reduced.size();
  if (n <= 3) {
    const ClassificationVerdict v = classify(reduced, copts);
    if (v.status == Status::LQN) return Certified{to_string(v.form), certified_exponent(v)};
    if (v.status == Status::NotLQN) return Refuted{*v.witness, 0};
    return std::nullopt;
  }
  if (construct_triangular_rep(reduced)) return Certified{to_string(Form::PatternI), static_cast<int>(n) + 1};
  if (v_space(reduced).dim() == 1) {
    const ClassificationVerdict v = structure_dimV1(reduced, copts);
    if (v.status == Status::LQN) return Certified{to_string(v.form), certified_exponent(v)};
    if (v.status == Status::NotLQN) return Refuted{*v.witness, 0};
  }
  return std::nullopt;
}

}  // namespace

AllXVerdict all_x_nilpotent(const ElementaryOperator& phi, const AllXOptions& opts) {
  const Index d = phi.dim();
  const LengthReduction red = minimal_length(phi);
  if (red.is_zero) return Certified{"zero operator", 1};
  if (opts.structural) {
    if (auto v = structural(red.reduced, opts)) return *v;
  }

  if (opts.grid) {
    // tr(phi(x)^p) is homogeneous of degree p in the d^2 entries of x: on the
    // chart x_11 = 1 the grid {0..top}^(d^2 - 1) decides it for every p <= top.
    const Index n = d * d - 1;
    long top = 0;
    while (top < d && grid_size(n, top + 1, opts.budget.grid_evaluations) <= opts.budget.grid_evaluations) ++top;
    if (top > 0) {
      const std::vector<Mat> units = images_of_units(red.reduced);
      std::vector<Mat> suffix(units.size() + 1, zero_matrix<GaussRational>(d, d));
      for (std::size_t k = units.size(); k-- > 1;) suffix[k] = suffix[k + 1] + units[k];
      const GaussRational height(top);
      Mat current = units.front();
      std::optional<Mat> witness;
      for_each_grid_point(n, top, [&](const std::vector<long>& t, Index moved) {
        if (moved >= 0) {
          const auto m = static_cast<std::size_t>(moved) + 1;
          current += units[m];
          current -= height * suffix[m + 1];
        }
        if (first_nonzero_trace_power(current, top) == 0) return true;
        Mat x(d, d);
        x(0, 0) = GaussRational(1);
        for (Index k = 0; k < n; ++k) x((k + 1) / d, (k + 1) % d) = GaussRational(t[static_cast<std::size_t>(k)]);
        witness = std::move(x);
        return false;
      });
      if (witness) {
        if (is_nilpotent(phi(*witness))) throw InconsistencyError("all_x_nilpotent: grid witness failed to re-verify");
        return Refuted{*witness, 0};
      }
      if (top == d) return Certified{"trace-power grid", static_cast<int>(d)};
    }
  }

  const WitnessSearch search = search_witness(phi, opts.budget.random_trials, opts.budget.height, opts.budget.seed);
  if (search.witness) return Refuted{*search.witness, search.trials_used};
  return ProbablyNilpotent{search.trials_used};
}

}  // namespace elemop
