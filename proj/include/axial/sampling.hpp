#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axial.hpp"

namespace axial {

/// Designated axes followed by their images under the Miyamoto involutions of
/// the designated axes, tau_c(a), deduplicated. Automorphisms map axes to
/// axes, so every entry is an axis whenever the designated ones are.
inline std::vector<Element> axis_pool(const Algebra& alg) {
  std::vector<Element> pool = alg.axes();
  std::vector<Matrix> taus;
  for (const auto& c : pool) {
    const auto dec = eigendecompose(c);
    if (dec.semisimple()) taus.push_back(miyamoto(dec));
  }
  const std::size_t designated = pool.size();
  for (const auto& tau : taus)
    for (std::size_t i = 0; i < designated; ++i) {
      Element img = apply(tau, pool[i]);
      if (std::find(pool.begin(), pool.end(), img) == pool.end()) pool.push_back(std::move(img));
    }
  return pool;
}

/// Element with small random integer coordinates in [-bound, bound].
inline Element random_element(const Algebra& alg, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vector v(alg.dim());
  for (auto& x : v) x = dist(rng);
  return alg.element(std::move(v));
}

/// Random combination of the vectors of a subspace.
inline Element random_in(const Algebra& alg, const SubspaceBasis& s, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vector v = zero_vector(alg.dim());
  for (const auto& b : s.vectors()) axpy(Rational(dist(rng)), b, v);
  return alg.element(std::move(v));
}

}  // namespace axial
