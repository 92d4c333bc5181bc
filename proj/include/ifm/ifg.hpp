#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ifm/matrix.hpp"
#include "ifm/operator.hpp"

namespace ifm {

/// A walk i0 -> i1 -> ... -> ik in the complete digraph of a square IFM.
/// Vertices are 0-based; repeats are allowed.
class PathSpec {
 public:
  explicit PathSpec(std::vector<std::size_t> vertices);

  std::size_t length() const noexcept { return vertices_.size() - 1; }
  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

  /// Throws Error{BadPath} when a vertex is out of range for an n x n matrix.
  void check_against(const Ifm& a) const;

 private:
  std::vector<std::size_t> vertices_;
};

/// Coefficients lambda^(k-1), lambda^(k-2)(1-lambda), ..., (1-lambda) of a
/// k-edge walk, first edge first.
std::vector<double> path_coefficients(std::size_t k, double lambda);

/// Closed-form walk weight under the generalized mean.
ComponentPair path_weight_gen(const Ifm& a, const PathSpec& path, double lambda, double p);

/// Left fold of the operator's pairwise combination along the walk.
ComponentPair path_weight_fold(const Ifm& a, const PathSpec& path, const Operator& op);

ComponentPair path_weight_star(const Ifm& a, const PathSpec& path, double lambda);

struct CriticalStructure {
  /// Edges whose entry is exactly <1,0>.
  std::vector<std::pair<std::size_t, std::size_t>> critical_edges;
  /// Vertices on a cycle of critical edges (self-loops included), ascending.
  std::vector<std::size_t> critical_vertices;
  /// reachable_columns[j]: j is reachable along critical edges from a critical vertex.
  std::vector<bool> reachable_columns;
};

CriticalStructure critical_structure(const Ifm& a);

/// Column j of the limit is all <1,0> iff reachable_columns[j].
std::vector<bool> predict_column_limits(const Ifm& a);

/// The limit is universal iff every column has an exact <1,0> entry.
bool predict_universal(const Ifm& a);

struct DotOptions {
  std::string graph_name = "G";
  int decimals = 5;
};

/// Graphviz digraph. Edges with mu > 0 or nu < 1 are drawn; critical edges
/// are bold and critical vertices double-circled.
std::string export_dot(const Ifm& a, const DotOptions& options = {});

}  // namespace ifm
