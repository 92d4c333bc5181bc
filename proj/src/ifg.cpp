#include "ifm/ifg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

#include "ifm/error.hpp"

namespace ifm {

PathSpec::PathSpec(std::vector<std::size_t> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error(ErrorKind::BadPath, "a path needs at least one edge");
}

void PathSpec::check_against(const Ifm& a) const {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "path weights need a square matrix");
  for (const auto v : vertices_) {
    if (v >= a.rows()) {
      std::ostringstream msg;
      msg << "vertex " << v + 1 << " outside 1.." << a.rows();
      throw Error(ErrorKind::BadPath, msg.str());
    }
  }
}

std::vector<double> path_coefficients(std::size_t k, double lambda) {
  std::vector<double> c(k);
  if (k == 0) return c;
  // c[e] weights edge e (0-based): lambda^(k-1) for the first edge,
  // lambda^(k-1-e) * (1 - lambda) afterwards.
  c[0] = std::pow(lambda, static_cast<double>(k - 1));
  for (std::size_t e = 1; e < k; ++e) {
    c[e] = std::pow(lambda, static_cast<double>(k - 1 - e)) * (1.0 - lambda);
  }
  return c;
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorKind::OutOfRange, "lambda must lie in [0,1]");
}

double closed_form(const std::vector<double>& values, const std::vector<double>& coeff, double p) {
  bool all_equal = true;
  double first = -1.0;
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (coeff[e] == 0.0) continue;
    if (first < 0.0) first = values[e];
    all_equal = all_equal && values[e] == first;
    if (p < 0.0 && values[e] == 0.0) return 0.0;
  }
  if (all_equal) return first;
  double sum = 0.0;
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (coeff[e] != 0.0) sum += coeff[e] * std::pow(values[e], p);
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace

ComponentPair path_weight_gen(const Ifm& a, const PathSpec& path, double lambda, double p) {
  if (p == 0.0) throw Error(ErrorKind::ZeroP, "p must be nonzero");
  check_lambda(lambda);
  path.check_against(a);
  const auto& v = path.vertices();
  const std::size_t k = path.length();
  std::vector<double> mu(k), nu(k);
  for (std::size_t e = 0; e < k; ++e) {
    mu[e] = a(v[e], v[e + 1]).mu;
    nu[e] = a(v[e], v[e + 1]).nu;
  }
  const auto coeff = path_coefficients(k, lambda);
  return {closed_form(mu, coeff, p), closed_form(nu, coeff, p)};
}

ComponentPair path_weight_fold(const Ifm& a, const PathSpec& path, const Operator& op) {
  path.check_against(a);
  const auto& v = path.vertices();
  ComponentPair w = a(v[0], v[1]);
  for (std::size_t e = 1; e < path.length(); ++e) w = op.combine(w, a(v[e], v[e + 1]));
  return w;
}

ComponentPair path_weight_star(const Ifm& a, const PathSpec& path, double lambda) {
  return path_weight_fold(a, path, Operator::convex_combo(lambda));
}

namespace {

// Tarjan's algorithm on the adjacency lists; returns a component id per vertex.
std::vector<int> strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int next_index = 0;
  int next_comp = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comp;
}

}  // namespace

CriticalStructure critical_structure(const Ifm& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "critical_structure: matrix must be square");
  const std::size_t n = a.rows();
  CriticalStructure cs;
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<bool> self_loop(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == kTop) {
        cs.critical_edges.emplace_back(i, j);
        adj[i].push_back(j);
        if (i == j) self_loop[i] = true;
      }
    }
  }

  const auto comp = strongly_connected(adj);
  std::vector<int> comp_size(n, 0);
  for (const auto c : comp) ++comp_size[static_cast<std::size_t>(c)];
  for (std::size_t v = 0; v < n; ++v) {
    if (self_loop[v] || comp_size[static_cast<std::size_t>(comp[v])] > 1) cs.critical_vertices.push_back(v);
  }

  cs.reachable_columns.assign(n, false);
  std::deque<std::size_t> queue(cs.critical_vertices.begin(), cs.critical_vertices.end());
  for (const auto v : cs.critical_vertices) cs.reachable_columns[v] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto w : adj[v]) {
      if (!cs.reachable_columns[w]) {
        cs.reachable_columns[w] = true;
        queue.push_back(w);
      }
    }
  }
  return cs;
}

std::vector<bool> predict_column_limits(const Ifm& a) {
  return critical_structure(a).reachable_columns;
}

bool predict_universal(const Ifm& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "predict_universal: matrix must be square");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool has_top = false;
    for (std::size_t i = 0; i < a.rows() && !has_top; ++i) has_top = a(i, j) == kTop;
    if (!has_top) return false;
  }
  return true;
}

}  // namespace ifm
