#include "ifm/operator.hpp"

#include <cmath>
#include <sstream>

#include "ifm/error.hpp"

namespace ifm {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream msg;
    msg << "lambda must lie in [0,1], got " << lambda;
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
}

}  // namespace

Operator Operator::generalized_mean(double lambda, double p) {
  check_lambda(lambda);
  if (p == 0.0) throw Error(ErrorKind::ZeroP, "p must be nonzero");
  if (!std::isfinite(p)) throw Error(ErrorKind::OutOfRange, "p must be finite");
  return Operator(GeneralizedMean{lambda, p});
}

Operator Operator::convex_combo(double lambda) {
  check_lambda(lambda);
  return Operator(ConvexCombo{lambda});
}

Operator Operator::max_min() { return generalized_mean(1.0, 1.0); }
Operator Operator::arith_mean() { return generalized_mean(0.5, 1.0); }
Operator Operator::root_power(double p) {
  if (!(p > 0.0)) throw Error(ErrorKind::OutOfRange, "root-power mean needs p > 0");
  return generalized_mean(0.5, p);
}
Operator Operator::convex_mean(double lambda) { return generalized_mean(lambda, 1.0); }
Operator Operator::harmonic() { return generalized_mean(0.5, -1.0); }

bool Operator::is_generalized_mean() const noexcept {
  return std::holds_alternative<GeneralizedMean>(variant_);
}

double Operator::lambda() const noexcept {
  return std::visit([](const auto& v) { return v.lambda; }, variant_);
}

std::optional<double> Operator::p() const noexcept {
  if (const auto* g = std::get_if<GeneralizedMean>(&variant_)) return g->p;
  return std::nullopt;
}

ComponentPair Operator::combine(ComponentPair left, ComponentPair right) const {
  if (const auto* g = std::get_if<GeneralizedMean>(&variant_)) {
    return gen_mean_pair(left, right, g->lambda, g->p);
  }
  return star_scalar(left, right, std::get<ConvexCombo>(variant_).lambda);
}

std::optional<double> Operator::cauchy_bound(int m) const {
  const double steps = static_cast<double>(m - 2);
  if (const auto* g = std::get_if<GeneralizedMean>(&variant_)) {
    if (g->p < 0.0) return std::nullopt;
    return std::pow(g->lambda, steps / g->p);
  }
  return std::pow(std::get<ConvexCombo>(variant_).alpha(), steps);
}

std::string Operator::describe() const {
  std::ostringstream out;
  if (const auto* g = std::get_if<GeneralizedMean>(&variant_)) {
    out << "gen-mean(lambda=" << g->lambda << ", p=" << g->p << ")";
  } else {
    const auto& c = std::get<ConvexCombo>(variant_);
    out << "star(lambda=" << c.lambda << ", alpha=" << c.alpha() << ")";
  }
  return out.str();
}

}  // namespace ifm
