#include "ifm/convergence.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "ifm/error.hpp"

namespace ifm {

const char* to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Proven: return "proven";
    case Guarantee::NoBound: return "no-bound";
    case Guarantee::NoGuarantee: return "no-guarantee";
  }
  return "unknown";
}

Guarantee guarantee_for(const Operator& op) {
  if (op.is_degenerate()) return Guarantee::NoGuarantee;
  if (const auto p = op.p(); p && *p < 0.0) return Guarantee::NoBound;
  return Guarantee::Proven;
}

namespace {

std::uint64_t fingerprint(const Ifm& m) {
  // FNV-1a over the raw bits; exact equality is confirmed separately.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](double v) {
    h ^= std::bit_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  for (const auto& e : m.entries()) {
    mix(e.mu);
    mix(e.nu);
  }
  return h;
}

}  // namespace

ConvergenceReport power_sequence(const Ifm& a, const Operator& op,
                                 const ConvergenceOptions& options) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "power_sequence: matrix must be square");
  if (!(options.eps > 0.0)) throw Error(ErrorKind::OutOfRange, "eps must be positive");
  if (options.max_iter < 1) throw Error(ErrorKind::OutOfRange, "max_iter must be >= 1");

  ConvergenceReport report{.limit = a};
  report.guarantee = guarantee_for(op);
  report.closure_violations = closure_violations(a);

  const bool detect_cycles = op.is_degenerate();
  // Powers seen so far, indexed by exponent - 1; only kept for cycle detection.
  std::vector<Ifm> history;
  std::unordered_multimap<std::uint64_t, int> seen;
  if (detect_cycles) {
    history.push_back(a);
    seen.emplace(fingerprint(a), 1);
  }

  Ifm previous = a;
  for (int it = 1; it <= options.max_iter; ++it) {
    Ifm current = compose(previous, a, op);
    const int m = it + 1;
    const double d = delta(current, previous);
    report.deltas.push_back(d);
    report.bound_trace.push_back(op.cauchy_bound(m));
    report.closure_violations += closure_violations(current);
    report.iterations = it;

    if (d <= options.eps) {
      report.converged = true;
      report.limit = std::move(current);
      return report;
    }
    if (detect_cycles) {
      const auto key = fingerprint(current);
      auto [lo, hi] = seen.equal_range(key);
      for (auto p = lo; p != hi; ++p) {
        if (history[static_cast<std::size_t>(p->second - 1)] == current) {
          report.oscillation_period = m - p->second;
          report.limit = std::move(current);
          return report;
        }
      }
      history.push_back(current);
      seen.emplace(key, m);
    }
    previous = std::move(current);
  }
  report.limit = std::move(previous);
  return report;
}

}  // namespace ifm
