#include "ifm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ifm/error.hpp"

namespace ifm {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorKind::DimensionMismatch, message);
}

}  // namespace

Ifm Ifm::from_ifns(std::size_t rows, std::size_t cols, std::span<const Ifn> entries) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  require(entries.size() == rows * cols, "entry count does not match rows x cols");
  std::vector<ComponentPair> data(entries.begin(), entries.end());
  return Ifm(rows, cols, std::move(data));
}

Ifm Ifm::from_pairs(std::size_t rows, std::size_t cols, std::vector<ComponentPair> entries) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  require(entries.size() == rows * cols, "entry count does not match rows x cols");
  for (const auto& e : entries) {
    if (!(e.mu >= 0.0 && e.mu <= 1.0 && e.nu >= 0.0 && e.nu <= 1.0)) {
      std::ostringstream msg;
      msg << "component outside [0,1]: <" << e.mu << "," << e.nu << ">";
      throw Error(ErrorKind::OutOfRange, msg.str());
    }
  }
  return Ifm(rows, cols, std::move(entries));
}

Ifm Ifm::filled(std::size_t rows, std::size_t cols, ComponentPair value) {
  return from_pairs(rows, cols, std::vector<ComponentPair>(rows * cols, value));
}

Ifm compose(const Ifm& a, const Ifm& b, const Operator& op) {
  require(a.cols() == b.rows(), "compose: left cols must equal right rows");
  const std::size_t inner = a.cols();
  Ifm out = Ifm::filled(a.rows(), b.cols(), kBottom);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double mu = -std::numeric_limits<double>::infinity();
      double nu = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < inner; ++t) {
        const ComponentPair c = op.combine(a(i, t), b(t, j));
        mu = std::max(mu, c.mu);
        nu = std::min(nu, c.nu);
      }
      out(i, j) = {mu, nu};
    }
  }
  return out;
}

Ifm power(const Ifm& a, int k, const Operator& op) {
  require(a.is_square(), "power: matrix must be square");
  if (k < 1) throw Error(ErrorKind::OutOfRange, "power: exponent must be >= 1");
  Ifm result = a;
  for (int step = 2; step <= k; ++step) result = compose(result, a, op);
  return result;
}

double delta(const Ifm& a, const Ifm& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "delta: shapes differ");
  double d = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    d = std::max({d, std::abs(ea[k].mu - eb[k].mu), std::abs(ea[k].nu - eb[k].nu)});
  }
  return d;
}

double row_uniformity(const Ifm& m) {
  double spread = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double mu_lo = m(0, j).mu, mu_hi = mu_lo;
    double nu_lo = m(0, j).nu, nu_hi = nu_lo;
    for (std::size_t i = 1; i < m.rows(); ++i) {
      mu_lo = std::min(mu_lo, m(i, j).mu);
      mu_hi = std::max(mu_hi, m(i, j).mu);
      nu_lo = std::min(nu_lo, m(i, j).nu);
      nu_hi = std::max(nu_hi, m(i, j).nu);
    }
    spread = std::max({spread, mu_hi - mu_lo, nu_hi - nu_lo});
  }
  return spread;
}

bool is_universal(const Ifm& m, double tol) {
  return std::ranges::all_of(m.entries(), [tol](const ComponentPair& e) {
    return e.mu >= 1.0 - tol && e.nu <= tol;
  });
}

std::size_t closure_violations(const Ifm& m) {
  return static_cast<std::size_t>(std::ranges::count_if(
      m.entries(), [](const ComponentPair& e) { return e.mu + e.nu > 1.0 + kSumTolerance; }));
}

}  // namespace ifm
