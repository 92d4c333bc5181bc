#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ifm/ifn.hpp"
#include "ifm/operator.hpp"

namespace ifm {

/// Row-major rectangular matrix of component pairs.
class Ifm {
 public:
  /// Validating constructor: every entry must be an IFN.
  static Ifm from_ifns(std::size_t rows, std::size_t cols, std::span<const Ifn> entries);
  /// Non-validating: components must lie in [0,1] but mu + nu may exceed 1.
  static Ifm from_pairs(std::size_t rows, std::size_t cols, std::vector<ComponentPair> entries);
  static Ifm filled(std::size_t rows, std::size_t cols, ComponentPair value);
  static Ifm universal(std::size_t n) { return filled(n, n, kTop); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const ComponentPair& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  ComponentPair& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const ComponentPair> entries() const noexcept { return data_; }

  friend bool operator==(const Ifm&, const Ifm&) = default;

 private:
  Ifm(std::size_t rows, std::size_t cols, std::vector<ComponentPair> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComponentPair> data_;
};

/// [A o B]_ij = < max_t combine(a_it, b_tj).mu, min_t combine(a_it, b_tj).nu >.
Ifm compose(const Ifm& a, const Ifm& b, const Operator& op);

/// Left-fold power: A^1 = A, A^k = A^(k-1) o A.
Ifm power(const Ifm& a, int k, const Operator& op);

/// Largest absolute componentwise difference.
double delta(const Ifm& a, const Ifm& b);

/// Largest spread (max - min over rows) of any column component. 0 when all
/// rows are identical.
double row_uniformity(const Ifm& m);

bool is_universal(const Ifm& m, double tol);

/// Number of entries with mu + nu > 1 + kSumTolerance.
std::size_t closure_violations(const Ifm& m);

}  // namespace ifm
