#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "cliffaut/signature.hpp"

namespace cliffaut {

/// Canonical basis blade e_{a1...ak} (a1 < ... < ak) as a bitmask: bit a-1
/// is set iff generator e_a is present. Blade 0 is the identity.
using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

struct BladeProduct {
  int sign;
  Blade blade;
  friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// Product of two canonical blades without range checks.
///
/// The sign counts the transpositions needed to bring the concatenated
/// generator word into ascending order, then folds in the metric of every
/// generator that appears in both factors.
inline BladeProduct blade_product_unchecked(Blade a, Blade b, std::uint32_t negative_mask) {
  int swaps = 0;
  for (Blade x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  swaps += std::popcount(a & b & negative_mask);
  return {(swaps & 1) ? -1 : 1, a ^ b};
}

/// Throws std::out_of_range when a blade does not fit the signature.
BladeProduct basis_blade_product(Blade a, Blade b, const Signature& sig);

/// Blade with the given 1-based generator indices (any order, no repeats).
/// Throws std::out_of_range for indices outside [1, 32).
Blade blade_from_indices(std::initializer_list<int> indices);

/// The pseudoscalar e_{1...n}.
inline Blade pseudoscalar(int n) { return (Blade{1} << n) - 1; }

/// Shorthand `e12` when n <= 9, brace form `e{1,10}` otherwise.
std::string blade_text(Blade b, int n);

}  // namespace cliffaut
