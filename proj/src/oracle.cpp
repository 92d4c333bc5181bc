#include "ifm/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ifm/error.hpp"
#include "ifm/io.hpp"

namespace ifm::oracle {

namespace {

std::uint64_t walk_count(std::uint64_t n, int m) {
  std::uint64_t total = n * n;
  for (int e = 1; e < m; ++e) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    total *= n;
  }
  return total;
}

// Extends every walk that currently ends at `at` with weight `w` by `left`
// more edges, the last of which must land on `target`.
void extend(const Ifm& a, const Operator& op, std::size_t at, ComponentPair w, int left,
            std::size_t target, ComponentPair& best) {
  if (left == 1) {
    const ComponentPair final_weight = op.combine(w, a(at, target));
    best.mu = std::max(best.mu, final_weight.mu);
    best.nu = std::min(best.nu, final_weight.nu);
    return;
  }
  for (std::size_t next = 0; next < a.rows(); ++next) {
    extend(a, op, next, op.combine(w, a(at, next)), left - 1, target, best);
  }
}

}  // namespace

Ifm brute_force_power(const Ifm& a, int m, const Operator& op, const OracleBudget& budget) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "brute_force_power: matrix must be square");
  if (m < 1) throw Error(ErrorKind::OutOfRange, "brute_force_power: m must be >= 1");
  const std::size_t n = a.rows();
  if (static_cast<int>(n) > budget.max_n || m > budget.max_m || walk_count(n, m) > budget.max_walks) {
    std::ostringstream msg;
    msg << "oracle budget exceeded: n=" << n << ", m=" << m << " (limits n<=" << budget.max_n
        << ", m<=" << budget.max_m << ")";
    throw Error(ErrorKind::BudgetExceeded, msg.str());
  }
  if (m == 1) return a;

  Ifm out = Ifm::filled(n, n, kBottom);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ComponentPair best{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
      for (std::size_t first = 0; first < n; ++first) {
        extend(a, op, first, a(i, first), m - 1, j, best);
      }
      out(i, j) = best;
    }
  }
  return out;
}

Ifm right_fold_power(const Ifm& a, int m, const Operator& op) {
  Ifm result = a;
  for (int step = 2; step <= m; ++step) result = compose(a, result, op);
  return result;
}

DifferentialReport differential_check(int trials, const OracleBudget& budget, std::uint64_t seed,
                                      const PowerFn& under_test) {
  if (trials < 1) throw Error(ErrorKind::Usage, "trials must be >= 1");
  const PowerFn& candidate = under_test ? under_test : PowerFn(power);

  static constexpr std::array<double, 5> kLambdas{0.0, 0.25, 0.5, 0.75, 0.9};
  static constexpr std::array<double, 4> kExponents{-1.0, 0.5, 1.0, 2.0};

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size_dist(1, budget.max_n);
  std::uniform_int_distribution<int> power_dist(1, budget.max_m);
  std::uniform_int_distribution<std::size_t> lambda_dist(0, kLambdas.size() - 1);
  std::uniform_int_distribution<std::size_t> p_dist(0, kExponents.size() - 1);
  std::bernoulli_distribution star_family(0.5);

  DifferentialReport report;
  for (int trial = 0; trial < trials; ++trial) {
    const auto n = static_cast<std::size_t>(size_dist(rng));
    const int m = power_dist(rng);
    const double lambda = kLambdas[lambda_dist(rng)];
    const double p = kExponents[p_dist(rng)];
    const Operator op = star_family(rng) ? Operator::convex_combo(lambda) : Operator::generalized_mean(lambda, p);

    std::vector<ComponentPair> entries(n * n);
    for (auto& e : entries) {
      const double u = unit(rng);
      const double v = unit(rng);
      e = {u, v * (1.0 - u)};
    }
    const Ifm a = Ifm::from_pairs(n, n, std::move(entries));

    const double diff = delta(candidate(a, m, op), brute_force_power(a, m, op, budget));
    report.trials = trial + 1;
    report.max_difference = std::max(report.max_difference, diff);
    if (diff > kOracleTolerance) {
      report.counterexample = Mismatch{a, op, m, diff};
      return report;
    }
  }
  return report;
}

std::string describe(const Mismatch& mismatch) {
  std::ostringstream out;
  out << "operator: " << mismatch.op.describe() << "\n"
      << "power: " << mismatch.m << "\n"
      << "max difference: " << mismatch.max_difference << "\n"
      << "matrix: " << io::format_matrix(mismatch.matrix);
  return out.str();
}

}  // namespace ifm::oracle
