#include "ifm/sweep.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "ifm/error.hpp"

namespace ifm {

void SweepPlan::validate() const {
  if (lambda_grid.empty()) throw Error(ErrorKind::Usage, "lambda grid is empty");
  for (const double l : lambda_grid) {
    if (!(l >= 0.0 && l <= 1.0)) throw Error(ErrorKind::Usage, "lambda grid values must lie in [0,1]");
  }
  if (family == OperatorFamily::GeneralizedMean) {
    if (p_grid.empty()) throw Error(ErrorKind::Usage, "p grid is empty");
    if (std::ranges::any_of(p_grid, [](double p) { return p == 0.0; })) {
      throw Error(ErrorKind::ZeroP, "p must be nonzero");
    }
  }
  if (!(eps > 0.0)) throw Error(ErrorKind::Usage, "eps must be positive");
  if (max_iter < 1) throw Error(ErrorKind::Usage, "max-iter must be >= 1");
  if (fixed_power && *fixed_power < 1) throw Error(ErrorKind::Usage, "steps must be >= 1");
}

namespace {

double mu_distance_to_u(const Ifm& m) {
  double d = 0.0;
  for (const auto& e : m.entries()) d = std::max(d, 1.0 - e.mu);
  return d;
}

SweepRow evaluate(const Ifm& a, const Operator& op, const SweepPlan& plan) {
  SweepRow row{.lambda = op.lambda(), .p = op.p(), .converged = false, .iterations = 0,
               .final_delta = 0.0, .mu_distance_to_u = 0.0, .guarantee = guarantee_for(op)};
  if (plan.fixed_power) {
    Ifm previous = a;
    Ifm current = a;
    for (int k = 2; k <= *plan.fixed_power; ++k) {
      previous = std::move(current);
      current = compose(previous, a, op);
    }
    row.iterations = *plan.fixed_power - 1;
    row.final_delta = delta(current, previous);
    row.converged = row.iterations > 0 && row.final_delta <= plan.eps;
    row.mu_distance_to_u = mu_distance_to_u(current);
    return row;
  }
  const auto report = power_sequence(a, op, {.eps = plan.eps, .max_iter = plan.max_iter});
  row.converged = report.converged;
  row.iterations = report.iterations;
  row.final_delta = report.final_delta();
  row.mu_distance_to_u = mu_distance_to_u(report.limit);
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Ifm& a, const SweepPlan& plan) {
  plan.validate();
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "sweep: matrix must be square");

  std::vector<double> lambdas = plan.lambda_grid;
  std::ranges::sort(lambdas);
  std::vector<Operator> cells;
  for (const double l : lambdas) {
    if (plan.family == OperatorFamily::ConvexCombo) {
      cells.push_back(Operator::convex_combo(l));
      continue;
    }
    std::vector<double> ps = plan.p_grid;
    std::ranges::sort(ps);
    for (const double p : ps) cells.push_back(Operator::generalized_mean(l, p));
  }

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (std::size_t begin = 0; begin < cells.size(); begin += workers) {
    const std::size_t end = std::min(cells.size(), begin + workers);
    std::vector<std::future<SweepRow>> pending;
    for (std::size_t c = begin; c < end; ++c) {
      pending.push_back(std::async(std::launch::async,
                                   [&a, &op = cells[c], &plan] { return evaluate(a, op, plan); }));
    }
    for (auto& f : pending) rows.push_back(f.get());
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "lambda,p,converged,iterations,final_delta,mu_distance_to_U,guarantee\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : rows) {
    out << r.lambda << ",";
    if (r.p) {
      out << *r.p;
    } else {
      out << "NA";
    }
    out << "," << (r.converged ? "true" : "false") << "," << r.iterations << "," << r.final_delta
        << "," << r.mu_distance_to_u << "," << to_string(r.guarantee) << "\n";
  }
  out.precision(old_precision);
}

}  // namespace ifm
