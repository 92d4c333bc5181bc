#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ifm/convergence.hpp"
#include "ifm/matrix.hpp"

namespace ifm::io {

// Matrix document:
//   {"rows":R,"cols":C,"entries":[[{"mu":m,"nu":n},...],...]}

/// Throws Error{ParseError} for malformed documents and Error{ValidationError}
/// (with 1-based coordinates) for entries that are not IFNs.
Ifm parse_matrix(std::string_view text);

Ifm read_matrix_file(const std::string& path);

struct FormatOptions {
  /// Round to this many decimals; full round-trip precision when empty.
  std::optional<int> display;
};

std::string format_matrix(const Ifm& m, const FormatOptions& options = {});

/// "start:stop:step" (inclusive stop within 1e-12) or a comma list.
/// Throws Error{Usage} on malformed or empty input.
std::vector<double> parse_grid(std::string_view text);

/// CSV with header m,delta,bound; bound is NA where no bound applies.
void write_trace_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace ifm::io
