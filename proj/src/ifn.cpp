#include "ifm/ifn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifm/error.hpp"

namespace ifm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SumViolation: return "SumViolation";
    case ErrorKind::ZeroP: return "ZeroP";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadPath: return "BadPath";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

void require_unit_lambda(double lambda) {
  if (!in_unit(lambda)) {
    std::ostringstream msg;
    msg << "lambda must lie in [0,1], got " << lambda;
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
}

}  // namespace

Ifn make_ifn(double mu, double nu) {
  if (!in_unit(mu) || !in_unit(nu)) {
    std::ostringstream msg;
    msg << "component outside [0,1]: <" << mu << "," << nu << ">";
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
  if (mu + nu > 1.0 + kSumTolerance) {
    std::ostringstream msg;
    msg << "mu + nu exceeds 1: <" << mu << "," << nu << ">";
    throw Error(ErrorKind::SumViolation, msg.str());
  }
  return Ifn(ComponentPair{mu, nu});
}

bool is_valid_ifn(ComponentPair a) noexcept {
  return in_unit(a.mu) && in_unit(a.nu) && a.mu + a.nu <= 1.0 + kSumTolerance;
}

bool dominance_leq(ComponentPair a, ComponentPair b) noexcept {
  return a.mu <= b.mu && a.nu >= b.nu;
}

double gen_mean_scalar(double x, double y, double lambda, double p) {
  if (p == 0.0) throw Error(ErrorKind::ZeroP, "p must be nonzero");
  const double wx = lambda;
  const double wy = 1.0 - lambda;
  if (wy == 0.0 || x == y) return x;
  if (wx == 0.0) return y;
  if (p < 0.0 && (x == 0.0 || y == 0.0)) return 0.0;

  double r;
  if (p == 1.0) {
    r = wx * x + wy * y;
  } else if (p == 2.0) {
    r = std::sqrt(wx * x * x + wy * y * y);
  } else if (p == 0.5) {
    const double s = wx * std::sqrt(x) + wy * std::sqrt(y);
    r = s * s;
  } else if (p == -1.0) {
    r = 1.0 / (wx / x + wy / y);
  } else {
    r = std::pow(wx * std::pow(x, p) + wy * std::pow(y, p), 1.0 / p);
  }
  return std::clamp(r, std::min(x, y), std::max(x, y));
}

ComponentPair gen_mean_pair(ComponentPair a, ComponentPair b, double lambda, double p) {
  return {gen_mean_scalar(a.mu, b.mu, lambda, p), gen_mean_scalar(a.nu, b.nu, lambda, p)};
}

namespace {

// lambda * pick + (1 - lambda) * avg, exact on equal arguments.
double star_component(double x, double y, double pick, double lambda) {
  if (x == y) return x;
  const double r = lambda * pick + (1.0 - lambda) * (x + y) / 2.0;
  return std::clamp(r, std::min(x, y), std::max(x, y));
}

}  // namespace

ComponentPair star_scalar(ComponentPair a, ComponentPair b, double lambda) noexcept {
  return {star_component(a.mu, b.mu, std::min(a.mu, b.mu), lambda),
          star_component(a.nu, b.nu, std::max(a.nu, b.nu), lambda)};
}

Ifn scalar_mult(double lambda, Ifn a) {
  require_unit_lambda(lambda);
  return make_ifn(lambda * a.mu(), (1.0 - lambda) * a.nu());
}

ComponentPair ifn_diff(Ifn b, Ifn a) {
  if (!dominance_leq(a, b)) {
    std::ostringstream msg;
    msg << "<" << a.mu() << "," << a.nu() << "> is not dominated by <" << b.mu() << ","
        << b.nu() << ">";
    throw Error(ErrorKind::NotDominated, msg.str());
  }
  return {b.mu() - a.mu(), a.nu() - b.nu()};
}

}  // namespace ifm
