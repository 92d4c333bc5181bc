#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ifm/matrix.hpp"
#include "ifm/operator.hpp"

namespace ifm {

struct ConvergenceOptions {
  double eps = 1e-12;
  int max_iter = 100000;
};

/// What the convergence theorems promise for an operator configuration.
enum class Guarantee {
  Proven,       // 0 <= lambda < 1 and p > 0, or convex combination with lambda < 1
  NoBound,      // p < 0: convergence claimed but no contraction bound
  NoGuarantee,  // lambda == 1: no contraction
};

const char* to_string(Guarantee g);
Guarantee guarantee_for(const Operator& op);

struct ConvergenceReport {
  Ifm limit;
  /// Number of compositions performed; the limit is A^(iterations + 1).
  int iterations = 0;
  bool converged = false;
  std::optional<int> oscillation_period{};
  /// deltas[k] = delta(A^(k+2), A^(k+1)).
  std::vector<double> deltas{};
  /// bound_trace[k] is the step bound for the same step; empty entries where
  /// no bound applies.
  std::vector<std::optional<double>> bound_trace{};
  /// Entries with mu + nu > 1 summed over every computed power.
  std::size_t closure_violations = 0;
  Guarantee guarantee = Guarantee::Proven;

  int final_power() const noexcept { return iterations + 1; }
  double final_delta() const noexcept { return deltas.empty() ? 0.0 : deltas.back(); }
};

/// Iterates A^m until delta(A^m, A^(m-1)) <= eps or max_iter compositions.
/// For degenerate operators (lambda == 1) exact repeats A^m == A^(m-j), j >= 2,
/// stop the run and are reported as an oscillation of period j.
ConvergenceReport power_sequence(const Ifm& a, const Operator& op,
                                 const ConvergenceOptions& options = {});

}  // namespace ifm
