// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ifm/convergence.hpp"
#include "ifm/ifg.hpp"
#include "ifm/ifn.hpp"
#include "ifm/matrix.hpp"
#include "ifm/oracle.hpp"
#include "../support.hpp"

using namespace ifm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void verdict(bool pass, const char* id, const std::string& detail) {
  std::printf("[%s] %s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double max_distance_to_top(const Ifm& m) {
  double d = 0.0;
  for (const auto& e : m.entries()) d = std::max({d, 1.0 - e.mu, e.nu});
  return d;
}

// Closure tallies shared by criteria 5-8 and checked by criterion 9.
std::size_t closure_checked_powers = 0;
std::size_t closure_failures = 0;

bool closure_applies(const Operator& op) {
  const auto p = op.p();
  return !p || *p <= 1.0;
}

void ac1_oracle() {
  const auto start = Clock::now();
  const auto report = oracle::differential_check(100, {.max_n = 4, .max_m = 5}, 42);
  const double secs = seconds_since(start);
  verdict(report.ok() && secs < 30.0, "AC1 oracle equivalence",
          fmt("(100 trials, seed 42, n<=4, m<=5): mismatches=%d max|diff|=%.3g tol=1e-12 time=%.2fs",
              report.ok() ? 0 : 1, report.max_difference, secs));
}

void ac2_example_a() {
  const auto start = Clock::now();
  const Ifm a25 = power(testing::example_a(), 25, Operator::generalized_mean(0.6, 1));
  const double secs = seconds_since(start);
  const double d = max_distance_to_top(a25);
  verdict(d <= 1e-5 && secs < 1.0, "AC2 example A: A^25 = U",
          fmt("(lambda=0.6, p=1): max distance to <1,0> = %.3g (tol 1e-5) time=%.3fs", d, secs));
}

void ac3_example_b() {
  const auto start = Clock::now();
  const Operator op = Operator::convex_combo(0.5);
  const Ifm b = testing::example_b();
  const Ifm b8 = power(b, 8, op);
  const Ifm b28 = power(b, 28, op);
  const double secs = seconds_since(start);

  const ComponentPair low{0.93326, 0.05339};
  const ComponentPair mid{0.94661, 0.04004};
  const std::array<std::array<ComponentPair, 3>, 3> printed{
      {{kTop, low, kTop}, {mid, kTop, mid}, {kTop, mid, kTop}}};
  double dev = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      dev = std::max({dev, std::abs(b8(i, j).mu - printed[i][j].mu), std::abs(b8(i, j).nu - printed[i][j].nu)});
    }
  }
  const double d28 = max_distance_to_top(b28);
  verdict(dev <= 1e-3 && d28 <= 1e-3 && secs < 1.0, "AC3 star example B^8, B^28",
          fmt("(lambda=0.5): B^8 max deviation from printed = %.3g (tol 1e-3), B^28 distance to U = %.3g "
              "(tol 1e-3) time=%.3fs",
              dev, d28, secs));
}

void ac4_scalar_example() {
  struct Case {
    ComponentPair a, b, c;
    ComponentPair star_diff, scaled_diff;
  };
  // Expected values as printed alongside the three orderings c<=a<b, a<=c<=b, a<b<c.
  const std::array<Case, 3> cases{{
      {{0.7, 0.3}, {0.8, 0.1}, {0.6, 0.3}, {0.03, 0.06}, {0.07, 0.06}},
      {{0.5, 0.4}, {0.8, 0.1}, {0.8, 0.1}, {0.21, 0.20}, {0.21, 0.09}},
      {{0.6, 0.3}, {0.7, 0.2}, {0.8, 0.1}, {0.07, 0.07}, {0.07, 0.03}},
  }};
  const double lambda = 0.4;
  const double alpha = (1 + lambda) / 2;
  bool pass = true;
  std::string detail;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& cs = cases[k];
    const auto bc = star_scalar(cs.b, cs.c, lambda);
    const auto ac = star_scalar(cs.a, cs.c, lambda);
    const auto star_diff = ifn_diff(make_ifn(bc.mu, bc.nu), make_ifn(ac.mu, ac.nu));
    const auto d = ifn_diff(make_ifn(cs.b.mu, cs.b.nu), make_ifn(cs.a.mu, cs.a.nu));
    const Ifn scaled = scalar_mult(alpha, make_ifn(d.mu, d.nu));
    const double err = std::max({std::abs(star_diff.mu - cs.star_diff.mu), std::abs(star_diff.nu - cs.star_diff.nu),
                                 std::abs(scaled.mu() - cs.scaled_diff.mu), std::abs(scaled.nu() - cs.scaled_diff.nu)});
    const bool ok = err <= 1e-12;
    pass = pass && ok;
    detail += fmt(" case%zu: b*c-a*c=<%.12g,%.12g> alpha(b-a)=<%.12g,%.12g> %s;", k + 1, star_diff.mu,
                  star_diff.nu, scaled.mu(), scaled.nu(), ok ? "ok" : "MISMATCH");
  }
  verdict(pass, "AC4 scalar star example (tol 1e-12)", detail);
}

struct BoundTally {
  std::size_t steps = 0;
  std::size_t violations = 0;
  std::size_t alt_violations = 0;
  double worst_excess = 0.0;
};

void ac5_ac6_cauchy() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240605);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  const std::array<double, 3> exponents{0.5, 1.0, 2.0};
  const double slack = 1e-12;
  const double eps = 1e-12;

  std::array<BoundTally, 3> gen{};
  BoundTally star;
  std::size_t converged_runs = 0;
  std::size_t nonuniform = 0;
  double worst_uniformity = 0.0;

  auto tally = [&](const ConvergenceReport& report, BoundTally& t, const std::function<double(int)>& alt) {
    for (std::size_t k = 0; k < report.deltas.size(); ++k) {
      const int m = static_cast<int>(k) + 2;
      const double bound = *report.bound_trace[k];
      ++t.steps;
      if (report.deltas[k] > bound + slack) {
        ++t.violations;
        t.worst_excess = std::max(t.worst_excess, report.deltas[k] - bound);
      }
      if (report.deltas[k] > alt(m) + slack) ++t.alt_violations;
    }
    if (report.converged) {
      ++converged_runs;
      const double u = row_uniformity(report.limit);
      worst_uniformity = std::max(worst_uniformity, u);
      if (u > 10 * eps) ++nonuniform;
    }
  };

  for (int trial = 0; trial < 200; ++trial) {
    const Ifm a = testing::random_ifm(rng, size(rng));
    for (int l10 = 1; l10 <= 9; ++l10) {
      const double lambda = l10 / 10.0;
      for (std::size_t k = 0; k < exponents.size(); ++k) {
        const double p = exponents[k];
        const Operator op = Operator::generalized_mean(lambda, p);
        const auto report = power_sequence(a, op, {.eps = eps, .max_iter = 199});
        closure_checked_powers += report.iterations;
        if (closure_applies(op)) closure_failures += report.closure_violations;
        tally(report, gen[k], [&](int m) { return std::pow(lambda, (m - 2) * std::min(p, 1.0 / p)); });
      }
      const Operator op = Operator::convex_combo(lambda);
      const auto report = power_sequence(a, op, {.eps = eps, .max_iter = 199});
      closure_checked_powers += report.iterations;
      closure_failures += report.closure_violations;
      const double alpha = (1 + lambda) / 2;
      tally(report, star, [&](int m) { return std::pow(alpha, m - 2); });
    }
  }
  const double secs = seconds_since(start);
  const std::size_t total = gen[0].violations + gen[1].violations + gen[2].violations + star.violations;
  verdict(total == 0 && secs < 60.0, "AC5 Cauchy bound",
          fmt("(200 IFMs n<=6, lambda 0.1..0.9, m<=200): violations p=0.5: %zu/%zu (worst excess %.3g), "
              "p=1: %zu/%zu, p=2: %zu/%zu, star alpha^(m-2): %zu/%zu; time=%.1fs",
              gen[0].violations, gen[0].steps, gen[0].worst_excess, gen[1].violations, gen[1].steps,
              gen[2].violations, gen[2].steps, star.violations, star.steps, secs));
  std::printf("       info: rate lambda^((m-2)*min(p,1/p)) violations p=0.5: %zu, p=1: %zu, p=2: %zu\n",
              gen[0].alt_violations, gen[1].alt_violations, gen[2].alt_violations);
  verdict(nonuniform == 0, "AC6 row-uniform limits",
          fmt("(every converged AC5 run): %zu converged runs, %zu with row_uniformity > 10*eps, worst %.3g",
              converged_runs, nonuniform, worst_uniformity));
}

void ac7_critical_prediction() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_int_distribution<int> lambda_pick(1, 9);
  std::size_t column_mismatch = 0, universal_mismatch = 0, not_converged = 0, instances_with_top = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Ifm a = testing::random_grid_ifm(rng, size(rng));
    if (std::ranges::any_of(a.entries(), [](const ComponentPair& e) { return e == kTop; })) ++instances_with_top;
    const double lambda = lambda_pick(rng) / 10.0;
    const double p = trial % 2 ? 1.0 : 0.5;
    const Operator op = Operator::generalized_mean(lambda, p);
    const auto report = power_sequence(a, op);
    closure_checked_powers += report.iterations;
    closure_failures += report.closure_violations;
    if (!report.converged) ++not_converged;
    const auto predicted = predict_column_limits(a);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      bool ok = true;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto e = report.limit(i, j);
        ok = ok && (predicted[j] ? (e.mu >= 1 - 1e-6 && e.nu <= 1e-6) : e.mu <= 1 - 1e-4);
      }
      if (!ok) ++column_mismatch;
    }
    if (predict_universal(a) != is_universal(report.limit, 1e-5)) ++universal_mismatch;
  }
  verdict(column_mismatch == 0 && universal_mismatch == 0 && not_converged == 0, "AC7 critical-path prediction",
          fmt("(100 grid IFMs, %zu with <1,0> entries): column mismatches=%zu universal mismatches=%zu "
              "unconverged=%zu",
              instances_with_top, column_mismatch, universal_mismatch, not_converged));
}

void ac8_p_monotonicity() {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  const std::array<double, 4> exponents{-1.0, 0.5, 1.0, 2.0};
  std::size_t violations = 0, comparisons = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Ifm a = testing::random_ifm(rng, size(rng));
    std::vector<Ifm> powers(exponents.size(), a);
    for (int n = 1; n <= 20; ++n) {
      if (n > 1) {
        for (std::size_t k = 0; k < exponents.size(); ++k) {
          const Operator op = Operator::generalized_mean(0.5, exponents[k]);
          powers[k] = compose(powers[k], a, op);
          ++closure_checked_powers;
          if (closure_applies(op)) closure_failures += closure_violations(powers[k]);
        }
      }
      for (std::size_t k = 0; k + 1 < exponents.size(); ++k) {
        for (std::size_t e = 0; e < a.entries().size(); ++e) {
          const auto lo = powers[k].entries()[e];
          const auto hi = powers[k + 1].entries()[e];
          comparisons += 2;
          if (lo.mu > hi.mu + 1e-12) ++violations;
          if (lo.nu > hi.nu + 1e-12) ++violations;
        }
      }
    }
  }
  verdict(violations == 0, "AC8 p-monotonicity",
          fmt("(50 IFMs, lambda=0.5, p in {-1,0.5,1,2}, n<=20): %zu violations of %zu comparisons", violations,
              comparisons));
}

void ac9_property_floor() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::array<double, 4> exponents{-1.0, 0.5, 1.0, 2.0};
  std::size_t normalization_failures = 0, fold_failures = 0;
  double worst_fold = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 5;
    const Ifm a = testing::random_ifm(rng, n);
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    std::vector<std::size_t> walk(len(rng) + 1);
    for (auto& v : walk) v = vertex(rng);
    const double lambda = unit(rng);
    const double p = exponents[static_cast<std::size_t>(trial) % exponents.size()];

    const auto coeff = path_coefficients(walk.size() - 1, lambda);
    double sum = 0.0;
    for (const double c : coeff) sum += c;
    if (std::abs(sum - 1.0) > 1e-12) ++normalization_failures;

    const PathSpec path(walk);
    const auto closed = path_weight_gen(a, path, lambda, p);
    const auto folded = path_weight_fold(a, path, Operator::generalized_mean(lambda, p));
    const double diff = std::max(std::abs(closed.mu - folded.mu), std::abs(closed.nu - folded.nu));
    worst_fold = std::max(worst_fold, diff);
    if (diff > 1e-12) ++fold_failures;
  }
  verdict(closure_failures == 0 && normalization_failures == 0 && fold_failures == 0, "AC9 property floor",
          fmt("closure violations=%zu over %zu powers (p<=1 and star); coefficient-sum failures=%zu/1000; "
              "fold/closed-form failures=%zu/1000 (worst %.3g)",
              closure_failures, closure_checked_powers, normalization_failures, fold_failures, worst_fold));
}

}  // namespace

int main() {
  ac1_oracle();
  ac2_example_a();
  ac3_example_b();
  ac4_scalar_example();
  ac5_ac6_cauchy();
  ac7_critical_prediction();
  ac8_p_monotonicity();
  ac9_property_floor();
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
