#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "ifm/convergence.hpp"
#include "ifm/matrix.hpp"

namespace ifm {

enum class OperatorFamily { GeneralizedMean, ConvexCombo };

struct SweepPlan {
  OperatorFamily family = OperatorFamily::GeneralizedMean;
  std::vector<double> lambda_grid;
  /// Ignored for the convex combination.
  std::vector<double> p_grid;
  double eps = 1e-12;
  int max_iter = 100000;
  /// When set, every cell is evaluated at exactly this power instead of
  /// iterating to convergence, so cells can be compared at matched steps.
  std::optional<int> fixed_power;

  /// Throws Error{Usage} for empty grids or out-of-range values.
  void validate() const;
};

struct SweepRow {
  double lambda;
  std::optional<double> p;
  bool converged;
  int iterations;
  double final_delta;
  /// Largest 1 - mu over the final power.
  double mu_distance_to_u;
  Guarantee guarantee;
};

/// One row per (lambda, p) cell, ordered by lambda then p. Cells run
/// concurrently.
std::vector<SweepRow> run_sweep(const Ifm& a, const SweepPlan& plan);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ifm
