#pragma once

#include "orbispec/catalog.hpp"
#include "orbispec/crystal.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

namespace orbispec::test {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

inline AffineIsometry iso(IntMatrix p, RatVector c = {}) {
  if (c.empty()) c.assign(p.rows(), Rational(0));
  return AffineIsometry{std::move(p), std::move(c)};
}

// The ten groups of the flat catalog entries.
inline std::vector<const CrystalGroup*> catalog_groups() {
  std::vector<const CrystalGroup*> out;
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (!e.is_flat()) continue;
    out.push_back(&e.flat().g1);
    out.push_back(&e.flat().g2);
  }
  return out;
}

// Unimodular matrix as a product of random elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
  }
  if (coef(rng) < 0)
    for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
  return u;
}

}  // namespace orbispec::test
