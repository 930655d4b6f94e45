#pragma once

// Reference implementations used only by the tests. They work on explicit
// generator index lists and plain Gauss-Jordan elimination, and share no
// code with the library beyond the Exact scalar and the coefficient layout.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cliffaut/multivector.hpp"

namespace oracle {

using cliffaut::Blade;
using cliffaut::Exact;
using cliffaut::Multivector;
using cliffaut::Signature;

inline std::vector<int> indices_of(Blade b) {
  std::vector<int> out;
  for (int a = 1; b != 0; ++a, b >>= 1) {
    if (b & 1u) out.push_back(a);
  }
  return out;
}

inline Blade blade_of(const std::vector<int>& indices) {
  Blade b = 0;
  for (int a : indices) b |= Blade{1} << (a - 1);
  return b;
}

/// Sorts a word of generators by adjacent swaps, anticommuting distinct
/// generators and contracting equal neighbours with the metric.
inline std::pair<int, Blade> reduce_word(std::vector<int> word, const Signature& sig) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= sig.is_complex() ? 1 : (word[i] <= sig.p() ? 1 : -1);
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, blade_of(word)};
}

inline std::pair<int, Blade> blade_product(Blade a, Blade b, const Signature& sig) {
  std::vector<int> word = indices_of(a);
  for (int x : indices_of(b)) word.push_back(x);
  return reduce_word(std::move(word), sig);
}

inline Multivector product(const Multivector& x, const Multivector& y) {
  const Signature& sig = x.signature();
  std::vector<Exact> c(sig.dimension());
  for (Blade a = 0; a < sig.dimension(); ++a) {
    if (x[a].is_zero()) continue;
    for (Blade b = 0; b < sig.dimension(); ++b) {
      if (y[b].is_zero()) continue;
      const auto [sign, blade] = blade_product(a, b, sig);
      c[blade] += Exact(sign) * x[a] * y[b];
    }
  }
  return Multivector(sig, std::move(c));
}

/// Sign picked up by reversing the generator word of b.
inline int reversion_sign(Blade b, const Signature& sig) {
  auto word = indices_of(b);
  std::reverse(word.begin(), word.end());
  return reduce_word(word, sig).first;
}

inline int grade_involution_sign(Blade b) { return indices_of(b).size() % 2 == 0 ? 1 : -1; }

inline Multivector apply_signs(const Multivector& x, bool hat, bool rev) {
  const Signature& sig = x.signature();
  std::vector<Exact> c(sig.dimension());
  for (Blade b = 0; b < sig.dimension(); ++b) {
    int s = 1;
    if (hat) s *= grade_involution_sign(b);
    if (rev) s *= reversion_sign(b, sig);
    c[b] = Exact(s) * x[b];
  }
  return Multivector(sig, std::move(c));
}

inline Multivector reverse(const Multivector& x) { return apply_signs(x, false, true); }
inline Multivector hat(const Multivector& x) { return apply_signs(x, true, false); }

/// Quaternion type m of a blade, read off from how the two involutions act.
inline int bar_type(Blade b, const Signature& sig) {
  const bool hat_even = grade_involution_sign(b) == 1;
  const bool rev_even = reversion_sign(b, sig) == 1;
  if (hat_even && rev_even) return 0;
  if (!hat_even && rev_even) return 1;
  if (hat_even) return 2;
  return 3;
}

/// Inverse by Gauss-Jordan elimination on the left-multiplication matrix.
inline std::optional<Multivector> inverse(const Multivector& x) {
  const Signature& sig = x.signature();
  const std::size_t d = sig.dimension();
  std::vector<std::vector<Exact>> m(d, std::vector<Exact>(d + 1));
  for (Blade col = 0; col < d; ++col) {
    const Multivector image = oracle::product(x, Multivector::blade(sig, col));
    for (Blade row = 0; row < d; ++row) m[row][col] = image[row];
  }
  m[0][d] = Exact(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col].is_zero()) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(m[pivot], m[col]);
    const Exact lead = m[col][col];
    for (auto& v : m[col]) v = v / lead;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Exact f = m[r][col];
      for (std::size_t k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Exact> c(d);
  for (std::size_t r = 0; r < d; ++r) c[r] = m[r][d];
  return Multivector(sig, std::move(c));
}

/// Every blade of `source` is conjugated into the span of `target` blades.
template <class Pred, class Target>
bool conjugation_preserves(const Multivector& t, Pred source, Target target) {
  const auto inv = oracle::inverse(t);
  const Signature& sig = t.signature();
  for (Blade b = 0; b < sig.dimension(); ++b) {
    if (!source(b)) continue;
    const Multivector image = oracle::product(oracle::product(t, Multivector::blade(sig, b)), *inv);
    for (Blade c = 0; c < sig.dimension(); ++c) {
      if (!image[c].is_zero() && !target(c)) return false;
    }
  }
  return true;
}

/// Blades commuting with every generator.
inline std::vector<Blade> central_blades(const Signature& sig) {
  std::vector<Blade> out;
  for (Blade b = 0; b < sig.dimension(); ++b) {
    bool central = true;
    for (int a = 1; a <= sig.n() && central; ++a) {
      const Blade g = Blade{1} << (a - 1);
      central = blade_product(b, g, sig) == blade_product(g, b, sig);
    }
    if (central) out.push_back(b);
  }
  return out;
}

}  // namespace oracle
