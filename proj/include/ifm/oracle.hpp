#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ifm/matrix.hpp"
#include "ifm/operator.hpp"

namespace ifm::oracle {

/// Enumeration limits for brute_force_power.
struct OracleBudget {
  int max_n = 4;
  int max_m = 5;
  /// Total walk count n^2 * n^(m-1) must stay under this.
  std::uint64_t max_walks = 10'000'000;
};

/// [A^m]_ij as max (mu) / min (nu) over every walk of m edges from i to j,
/// with walk weights folded edge by edge. Throws Error{BudgetExceeded}.
Ifm brute_force_power(const Ifm& a, int m, const Operator& op, const OracleBudget& budget = {});

using PowerFn = std::function<Ifm(const Ifm&, int, const Operator&)>;

/// Right-fold power A o (A o (... o A)). Not a valid power; exists so the
/// differential check can be shown to catch a fold-order bug.
Ifm right_fold_power(const Ifm& a, int m, const Operator& op);

struct Mismatch {
  Ifm matrix;
  Operator op;
  int m;
  double max_difference;
};

struct DifferentialReport {
  int trials = 0;
  double max_difference = 0.0;
  std::optional<Mismatch> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

inline constexpr double kOracleTolerance = 1e-12;

/// Random IFMs (n <= max_n) and operators (lambda in {0,.25,.5,.75,.9},
/// p in {-1,.5,1,2}, both families), m <= max_m. Stops at the first
/// disagreement beyond kOracleTolerance. Deterministic for a fixed seed.
DifferentialReport differential_check(int trials, const OracleBudget& budget, std::uint64_t seed,
                                      const PowerFn& under_test = {});

std::string describe(const Mismatch& mismatch);

}  // namespace ifm::oracle
