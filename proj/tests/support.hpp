#pragma once

#include <random>
#include <vector>

#include "cliffaut/multivector.hpp"
#include "cliffaut/registry.hpp"

namespace support {

using cliffaut::Exact;
using cliffaut::Multivector;
using cliffaut::Signature;

/// Small integer coefficients in [-3, 3]; each blade is kept with
/// probability `density`. Complex signatures also get imaginary parts.
inline Multivector random_mv(const Signature& sig, std::mt19937_64& rng, double density = 0.5) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::bernoulli_distribution keep(density);
  std::vector<Exact> c(sig.dimension());
  for (auto& x : c) {
    if (!keep(rng)) continue;
    const int re = coeff(rng);
    const int im = sig.is_complex() ? coeff(rng) : 0;
    x = Exact(mpq_class(re), mpq_class(im));
  }
  return Multivector(sig, std::move(c));
}

/// Every signature with 1 <= n <= max_n, real ones first.
inline std::vector<Signature> signatures(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : cliffaut::signatures_of_dimension(n)) out.push_back(s);
  }
  return out;
}

}  // namespace support
