#pragma once

#include <random>
#include <vector>

#include "ifm/matrix.hpp"

namespace ifm::testing {

inline Ifm from_rows(std::vector<std::vector<ComponentPair>> rows) {
  std::vector<Ifn> values;
  for (const auto& r : rows) {
    for (const auto& e : r) values.push_back(make_ifn(e.mu, e.nu));
  }
  return Ifm::from_ifns(rows.size(), rows.front().size(), values);
}

inline Ifm example_a() {
  return from_rows({{{1, 0}, {0.5, 0.4}, {0, 1}},
                    {{0, 1}, {0.6, 0.3}, {1, 0}},
                    {{1, 0}, {1, 0}, {0, 1}}});
}

inline Ifm example_b() {
  return from_rows({{{0, 1}, {1, 0}, {0.5, 0.4}},
                    {{1, 0}, {0, 1}, {1, 0}},
                    {{0.6, 0.3}, {1, 0}, {0, 1}}});
}

/// mu = u, nu = v * (1 - u) with u, v uniform.
inline ComponentPair random_ifn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const double v = unit(rng);
  return {u, v * (1.0 - u)};
}

inline Ifm random_ifm(std::mt19937_64& rng, std::size_t n) {
  std::vector<ComponentPair> e(n * n);
  for (auto& x : e) x = random_ifn(rng);
  return Ifm::from_pairs(n, n, std::move(e));
}

/// Entries on the 0.1 grid; roughly `top_rate` of them exactly <1,0>.
inline Ifm random_grid_ifm(std::mt19937_64& rng, std::size_t n, double top_rate = 0.3) {
  std::bernoulli_distribution top(top_rate);
  std::uniform_int_distribution<int> tenth(0, 10);
  std::vector<ComponentPair> e(n * n);
  for (auto& x : e) {
    if (top(rng)) {
      x = kTop;
      continue;
    }
    const int mu = tenth(rng);
    const int nu = std::uniform_int_distribution<int>(0, 10 - mu)(rng);
    x = {mu / 10.0, nu / 10.0};
  }
  return Ifm::from_pairs(n, n, std::move(e));
}

}  // namespace ifm::testing
