#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ifm/ifn.hpp"

namespace ifm {

struct GeneralizedMean {
  double lambda;
  double p;
};

struct ConvexCombo {
  double lambda;
  double alpha() const noexcept { return (1.0 + lambda) / 2.0; }
};

/// Composition rule: max over t of the mu-combination, min over t of the
/// nu-combination. Immutable and validated on construction.
class Operator {
 public:
  using Variant = std::variant<GeneralizedMean, ConvexCombo>;

  static Operator generalized_mean(double lambda, double p);
  static Operator convex_combo(double lambda);

  // Named special cases of the generalized-mean family.
  static Operator max_min();
  static Operator arith_mean();
  static Operator root_power(double p);
  static Operator convex_mean(double lambda);
  static Operator harmonic();

  const Variant& variant() const noexcept { return variant_; }
  bool is_generalized_mean() const noexcept;
  double lambda() const noexcept;
  /// Exponent of the generalized mean; empty for the convex combination.
  std::optional<double> p() const noexcept;

  ComponentPair combine(ComponentPair left, ComponentPair right) const;

  /// lambda == 1: no contraction, powers may cycle.
  bool is_degenerate() const noexcept { return lambda() == 1.0; }

  /// Step bound lambda^((m-2)/p) or alpha^(m-2) for the step producing the
  /// m-th power (m >= 2). Empty when p < 0, where the bound does not apply.
  std::optional<double> cauchy_bound(int m) const;

  std::string describe() const;

 private:
  explicit Operator(Variant v) : variant_(v) {}
  Variant variant_;
};

}  // namespace ifm
