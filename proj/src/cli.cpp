#include "ifm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ifm/convergence.hpp"
#include "ifm/error.hpp"
#include "ifm/ifg.hpp"
#include "ifm/io.hpp"
#include "ifm/oracle.hpp"
#include "ifm/sweep.hpp"

namespace ifm::cli {

namespace {

struct OperatorArgs {
  std::string name = "gen-mean";
  double lambda = 0.5;
  double p = 1.0;
};

const std::vector<std::string> kOperatorNames{"gen-mean", "star",   "max-min", "arith",
                                              "root-power", "convex", "harmonic"};

void add_operator_options(CLI::App* cmd, OperatorArgs& args) {
  cmd->add_option("--op", args.name, "Operator: gen-mean, star, max-min, arith, root-power, convex, harmonic")
      ->check(CLI::IsMember(kOperatorNames));
  cmd->add_option("--lambda", args.lambda, "Weight lambda in [0,1]");
  cmd->add_option("--p", args.p, "Nonzero exponent of the generalized mean");
}

Operator make_operator(const OperatorArgs& args) {
  if (args.name == "gen-mean") return Operator::generalized_mean(args.lambda, args.p);
  if (args.name == "star") return Operator::convex_combo(args.lambda);
  if (args.name == "max-min") return Operator::max_min();
  if (args.name == "arith") return Operator::arith_mean();
  if (args.name == "root-power") return Operator::root_power(args.p);
  if (args.name == "convex") return Operator::convex_mean(args.lambda);
  return Operator::harmonic();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::Usage:
    case ErrorKind::BudgetExceeded:
      return kInputError;
    default:
      return kMathError;
  }
}

io::FormatOptions display_options(int display) {
  io::FormatOptions options;
  if (display >= 0) options.display = display;
  return options;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + path);
  out << content;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int cmd_power(const std::string& input, const OperatorArgs& op_args, int steps, int display,
              std::ostream& out) {
  const Ifm a = io::read_matrix_file(input);
  const Operator op = make_operator(op_args);
  out << io::format_matrix(power(a, steps, op), display_options(display));
  return kOk;
}

int cmd_converge(const std::string& input, const OperatorArgs& op_args, double eps, int max_iter,
                 const std::string& trace, int display, std::ostream& out) {
  const Ifm a = io::read_matrix_file(input);
  const Operator op = make_operator(op_args);
  const auto report = power_sequence(a, op, {.eps = eps, .max_iter = max_iter});
  if (!trace.empty()) {
    std::ostringstream csv;
    io::write_trace_csv(csv, report);
    write_file(trace, csv.str());
  }
  out << "operator: " << op.describe() << "\n"
      << "converged: " << yes_no(report.converged) << "\n"
      << "iterations: " << report.iterations << "\n"
      << "final power: " << report.final_power() << "\n"
      << "final delta: " << report.final_delta() << "\n"
      << "oscillation period: "
      << (report.oscillation_period ? std::to_string(*report.oscillation_period) : "none") << "\n"
      << "guarantee: " << to_string(report.guarantee) << "\n"
      << "closure violations: " << report.closure_violations << "\n"
      << "row uniformity: " << row_uniformity(report.limit) << "\n"
      << "universal (tol 1e-5): " << yes_no(is_universal(report.limit, 1e-5)) << "\n"
      << "limit:\n"
      << io::format_matrix(report.limit, display_options(display));
  return report.converged ? kOk : kNotConverged;
}

int cmd_analyze(const std::string& input, const std::string& dot, std::ostream& out) {
  const Ifm a = io::read_matrix_file(input);
  const auto cs = critical_structure(a);
  out << "critical edges:";
  for (const auto& [i, j] : cs.critical_edges) out << " (" << i + 1 << "," << j + 1 << ")";
  out << "\ncritical vertices: {";
  for (std::size_t k = 0; k < cs.critical_vertices.size(); ++k) {
    out << (k ? "," : "") << cs.critical_vertices[k] + 1;
  }
  out << "}\ncolumn limits <1,0>:";
  for (std::size_t j = 0; j < cs.reachable_columns.size(); ++j) {
    out << " " << j + 1 << ":" << yes_no(cs.reachable_columns[j]);
  }
  out << "\npredict universal: " << yes_no(predict_universal(a)) << "\n";
  if (!dot.empty()) write_file(dot, export_dot(a));
  return kOk;
}

struct SweepArgs {
  std::string input;
  std::string family = "gen-mean";
  std::string lambda_grid;
  std::string p_grid = "1";
  double eps = 1e-12;
  int max_iter = 100000;
  int steps = 0;
  std::string output;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  SweepPlan plan;
  plan.family = args.family == "star" ? OperatorFamily::ConvexCombo : OperatorFamily::GeneralizedMean;
  plan.lambda_grid = io::parse_grid(args.lambda_grid);
  if (plan.family == OperatorFamily::GeneralizedMean) plan.p_grid = io::parse_grid(args.p_grid);
  plan.eps = args.eps;
  plan.max_iter = args.max_iter;
  if (args.steps > 0) plan.fixed_power = args.steps;
  plan.validate();

  const Ifm a = io::read_matrix_file(args.input);
  std::ostringstream csv;
  write_sweep_csv(csv, run_sweep(a, plan));
  if (args.output.empty()) {
    out << csv.str();
  } else {
    write_file(args.output, csv.str());
  }
  return kOk;
}

struct OracleArgs {
  int cases = 100;
  std::uint64_t seed = 42;
  int max_n = 4;
  int max_m = 5;
  std::string mutate;
};

int cmd_oracle_check(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  if (args.cases < 1) throw Error(ErrorKind::Usage, "--cases must be >= 1");
  oracle::OracleBudget budget{.max_n = args.max_n, .max_m = args.max_m};
  oracle::PowerFn under_test;
  if (args.mutate == "right-fold") under_test = oracle::right_fold_power;

  const auto report = oracle::differential_check(args.cases, budget, args.seed, under_test);
  if (!report.ok()) {
    err << "oracle mismatch after " << report.trials << " trials\n"
        << oracle::describe(*report.counterexample);
    return kOracleMismatch;
  }
  out << "oracle-check: " << report.trials << " trials, 0 mismatches, max difference "
      << report.max_difference << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Powers of intuitionistic fuzzy matrices", "ifm"};
  app.require_subcommand(1);

  std::string input;
  OperatorArgs op_args;
  int steps = 1;
  int display = -1;
  double eps = 1e-12;
  int max_iter = 100000;
  std::string trace;
  std::string dot;
  SweepArgs sweep;
  OracleArgs oracle_args;

  auto* power_cmd = app.add_subcommand("power", "Print the k-th left-fold power");
  power_cmd->add_option("--input", input, "Matrix JSON document")->required();
  add_operator_options(power_cmd, op_args);
  power_cmd->add_option("--steps", steps, "Exponent k >= 1")->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("--display", display, "Round output to this many decimals");

  auto* converge_cmd = app.add_subcommand("converge", "Iterate powers to their limit");
  converge_cmd->add_option("--input", input, "Matrix JSON document")->required();
  add_operator_options(converge_cmd, op_args);
  converge_cmd->add_option("--eps", eps, "Convergence tolerance on successive powers");
  converge_cmd->add_option("--max-iter", max_iter, "Maximum number of compositions");
  converge_cmd->add_option("--trace", trace, "Write per-step CSV (m,delta,bound)");
  converge_cmd->add_option("--display", display, "Round output to this many decimals");

  auto* analyze_cmd = app.add_subcommand("analyze", "Critical structure and limit predictions");
  analyze_cmd->add_option("--input", input, "Matrix JSON document")->required();
  analyze_cmd->add_option("--dot", dot, "Write a Graphviz digraph");

  auto* sweep_cmd = app.add_subcommand("sweep", "Convergence over a (lambda, p) grid as CSV");
  sweep_cmd->add_option("--input", sweep.input, "Matrix JSON document")->required();
  sweep_cmd->add_option("--op", sweep.family, "Operator family: gen-mean or star")
      ->check(CLI::IsMember({"gen-mean", "star"}));
  sweep_cmd->add_option("--lambda-grid", sweep.lambda_grid, "start:stop:step or comma list")->required();
  sweep_cmd->add_option("--p-grid", sweep.p_grid, "start:stop:step or comma list");
  sweep_cmd->add_option("--eps", sweep.eps, "Convergence tolerance");
  sweep_cmd->add_option("--max-iter", sweep.max_iter, "Maximum number of compositions");
  sweep_cmd->add_option("--steps", sweep.steps, "Evaluate every cell at this power instead");
  sweep_cmd->add_option("--output", sweep.output, "CSV file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Differential check against walk enumeration");
  oracle_cmd->add_option("--cases", oracle_args.cases, "Number of random trials");
  oracle_cmd->add_option("--seed", oracle_args.seed, "RNG seed");
  oracle_cmd->add_option("--max-n", oracle_args.max_n, "Largest matrix order");
  oracle_cmd->add_option("--max-m", oracle_args.max_m, "Largest power");
  oracle_cmd->add_option("--mutate", oracle_args.mutate, "Check a deliberately wrong power (right-fold)")
      ->check(CLI::IsMember({"right-fold"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*power_cmd) return cmd_power(input, op_args, steps, display, out);
    if (*converge_cmd) return cmd_converge(input, op_args, eps, max_iter, trace, display, out);
    if (*analyze_cmd) return cmd_analyze(input, dot, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    return cmd_oracle_check(oracle_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace ifm::cli
