#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ifm/error.hpp"
#include "ifm/ifg.hpp"

namespace ifm {

namespace {

std::string rounded(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  double r = std::round(v * scale) / scale;
  if (r == 0.0) r = 0.0;  // no "-0"
  std::ostringstream out;
  out << std::setprecision(decimals + 1) << r;
  return out.str();
}

}  // namespace

std::string export_dot(const Ifm& a, const DotOptions& options) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "export_dot: matrix must be square");
  const auto cs = critical_structure(a);
  const std::size_t n = a.rows();

  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < n; ++v) {
    const bool critical = std::ranges::binary_search(cs.critical_vertices, v);
    out << "  v" << v + 1 << " [label=\"v" << v + 1 << "\"";
    if (critical) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = a(i, j);
      if (!(e.mu > 0.0 || e.nu < 1.0)) continue;
      out << "  v" << i + 1 << " -> v" << j + 1 << " [label=\"⟨"
          << rounded(e.mu, options.decimals) << "," << rounded(e.nu, options.decimals)
          << "⟩\"";
      if (e == kTop) out << ", style=bold";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ifm
