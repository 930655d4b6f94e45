#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffaut/blade.hpp"
#include "cliffaut/errors.hpp"
#include "cliffaut/scalar.hpp"
#include "cliffaut/signature.hpp"
#include "cliffaut/subspace.hpp"

namespace cliffaut {

template <class S>
inline constexpr Backend backend_of = Backend::Exact;
template <>
inline constexpr Backend backend_of<FloatScalar> = Backend::Float;

/// Dense element of a Clifford algebra: one scalar per canonical blade,
/// indexed by blade bitmask. Values are immutable after construction.
template <class S>
class BasicMultivector {
 public:
  using Scalar = S;

  /// The zero element.
  explicit BasicMultivector(Signature sig)
      : sig_(sig.with_backend(backend_of<S>)), coeffs_(sig.dimension()) {}

  BasicMultivector(Signature sig, std::vector<S> coeffs)
      : sig_(sig.with_backend(backend_of<S>)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.dimension()) {
      throw std::invalid_argument("coefficient count must equal 2^n");
    }
  }

  static BasicMultivector scalar(Signature sig, S value) {
    return blade(sig, 0, std::move(value));
  }

  static BasicMultivector blade(Signature sig, Blade b, S value = S(1)) {
    if (b >= sig.dimension()) throw std::out_of_range("blade outside the signature");
    std::vector<S> c(sig.dimension());
    c[b] = std::move(value);
    return BasicMultivector(sig, std::move(c));
  }

  /// Generator e_a for 1-based a.
  static BasicMultivector generator(Signature sig, int a, S value = S(1)) {
    if (a < 1 || a > sig.n()) throw std::out_of_range("generator index out of range");
    return blade(sig, Blade{1} << (a - 1), std::move(value));
  }

  const Signature& signature() const { return sig_; }
  std::span<const S> coefficients() const { return coeffs_; }
  const S& operator[](Blade b) const { return coeffs_.at(b); }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!ScalarTraits<S>::is_zero(c)) return false;
    }
    return true;
  }

  /// Blades carrying a nonzero coefficient, ascending.
  std::vector<Blade> support() const {
    std::vector<Blade> out;
    for (std::size_t b = 0; b < coeffs_.size(); ++b) {
      if (!ScalarTraits<S>::is_zero(coeffs_[b])) out.push_back(static_cast<Blade>(b));
    }
    return out;
  }

  /// True iff the element is a multiple of the identity.
  bool is_scalar() const {
    for (std::size_t b = 1; b < coeffs_.size(); ++b) {
      if (!ScalarTraits<S>::is_zero(coeffs_[b])) return false;
    }
    return true;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  friend BasicMultivector operator+(const BasicMultivector& a, const BasicMultivector& b) {
    require_same(a, b);
    std::vector<S> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return BasicMultivector(a.sig_, std::move(c));
  }

  friend BasicMultivector operator-(const BasicMultivector& a, const BasicMultivector& b) {
    require_same(a, b);
    std::vector<S> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return BasicMultivector(a.sig_, std::move(c));
  }

  BasicMultivector operator-() const {
    std::vector<S> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!ScalarTraits<S>::is_zero(coeffs_[i])) c[i] = -coeffs_[i];
    }
    return BasicMultivector(sig_, std::move(c));
  }

  friend BasicMultivector operator*(const S& s, const BasicMultivector& a) {
    std::vector<S> c(a.coeffs_.size());
    if (ScalarTraits<S>::is_zero(s)) return BasicMultivector(a.sig_, std::move(c));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!ScalarTraits<S>::is_zero(a.coeffs_[i])) c[i] = s * a.coeffs_[i];
    }
    return BasicMultivector(a.sig_, std::move(c));
  }

  friend BasicMultivector operator*(const BasicMultivector& a, const S& s) { return s * a; }

  /// Geometric product.
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    require_same(a, b);
    const std::uint32_t neg = a.sig_.negative_mask();
    const auto sa = a.support();
    const auto sb = b.support();
    std::vector<S> c(a.coeffs_.size());
    for (Blade x : sa) {
      for (Blade y : sb) {
        const BladeProduct p = blade_product_unchecked(x, y, neg);
        ScalarTraits<S>::add_product(c[p.blade], p.sign, a.coeffs_[x], b.coeffs_[y]);
      }
    }
    return BasicMultivector(a.sig_, std::move(c));
  }

  /// a * B for a single canonical blade B: a signed permutation of the
  /// coefficients.
  BasicMultivector times_blade(Blade blade) const {
    const std::uint32_t neg = sig_.negative_mask();
    std::vector<S> c(coeffs_.size());
    for (std::size_t x = 0; x < coeffs_.size(); ++x) {
      if (ScalarTraits<S>::is_zero(coeffs_[x])) continue;
      const BladeProduct p = blade_product_unchecked(static_cast<Blade>(x), blade, neg);
      c[p.blade] = p.sign > 0 ? coeffs_[x] : -coeffs_[x];
    }
    return BasicMultivector(sig_, std::move(c));
  }

  /// B * a for a single canonical blade B.
  BasicMultivector blade_times(Blade blade) const {
    const std::uint32_t neg = sig_.negative_mask();
    std::vector<S> c(coeffs_.size());
    for (std::size_t x = 0; x < coeffs_.size(); ++x) {
      if (ScalarTraits<S>::is_zero(coeffs_[x])) continue;
      const BladeProduct p = blade_product_unchecked(blade, static_cast<Blade>(x), neg);
      c[p.blade] = p.sign > 0 ? coeffs_[x] : -coeffs_[x];
    }
    return BasicMultivector(sig_, std::move(c));
  }

  static void require_same(const BasicMultivector& a, const BasicMultivector& b) {
    if (a.sig_ != b.sig_) throw SignatureMismatch();
  }

 private:
  Signature sig_;
  std::vector<S> coeffs_;
};

using Multivector = BasicMultivector<Exact>;
using FloatMultivector = BasicMultivector<FloatScalar>;

template <class S>
BasicMultivector<S> geometric_product(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return a * b;
}

/// Coefficient-wise linear combination. Throws std::invalid_argument on an
/// empty list and SignatureMismatch on mixed signatures.
template <class S>
BasicMultivector<S> linear_combine(std::span<const std::pair<S, BasicMultivector<S>>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine needs at least one term");
  const Signature sig = terms.front().second.signature();
  std::vector<S> c(sig.dimension());
  for (const auto& [s, x] : terms) {
    if (x.signature() != sig) throw SignatureMismatch();
    const auto xc = x.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!ScalarTraits<S>::is_zero(xc[i])) ScalarTraits<S>::add_product(c[i], 1, s, xc[i]);
    }
  }
  return BasicMultivector<S>(sig, std::move(c));
}

template <class S>
BasicMultivector<S> linear_combine(std::initializer_list<std::pair<S, BasicMultivector<S>>> terms) {
  return linear_combine<S>(std::span<const std::pair<S, BasicMultivector<S>>>(terms.begin(), terms.size()));
}

enum class Involution { GradeInvolution, Reversion, CliffordConjugation };

/// Sign the involution applies to a grade-k component.
inline int involution_sign(Involution kind, int k) {
  switch (kind) {
    case Involution::GradeInvolution:
      return (k % 2 == 0) ? 1 : -1;
    case Involution::Reversion:
      return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    case Involution::CliffordConjugation:
      return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1;
  }
  return 1;
}

template <class S>
BasicMultivector<S> involution(const BasicMultivector<S>& a, Involution kind) {
  const auto ac = a.coefficients();
  std::vector<S> c(ac.begin(), ac.end());
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (involution_sign(kind, grade(static_cast<Blade>(b))) < 0 && !ScalarTraits<S>::is_zero(c[b])) {
      c[b] = -c[b];
    }
  }
  return BasicMultivector<S>(a.signature(), std::move(c));
}

template <class S>
BasicMultivector<S> reverse(const BasicMultivector<S>& a) {
  return involution(a, Involution::Reversion);
}

template <class S>
BasicMultivector<S> grade_involution(const BasicMultivector<S>& a) {
  return involution(a, Involution::GradeInvolution);
}

template <class S>
BasicMultivector<S> clifford_conjugate(const BasicMultivector<S>& a) {
  return involution(a, Involution::CliffordConjugation);
}

inline void require_spec_matches(const SubspaceSpec& spec, const Signature& sig) {
  if (spec.n() != sig.n()) throw std::invalid_argument("subspace belongs to a different dimension");
}

template <class S>
BasicMultivector<S> grade_project(const BasicMultivector<S>& a, const SubspaceSpec& spec) {
  require_spec_matches(spec, a.signature());
  const auto ac = a.coefficients();
  std::vector<S> c(ac.size());
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (spec.contains_blade(static_cast<Blade>(b))) c[b] = ac[b];
  }
  return BasicMultivector<S>(a.signature(), std::move(c));
}

/// Exact membership in a graded subspace; the zero element belongs to every
/// subspace.
inline bool in_subspace(const Multivector& a, const SubspaceSpec& spec) {
  require_spec_matches(spec, a.signature());
  const auto ac = a.coefficients();
  for (std::size_t b = 0; b < ac.size(); ++b) {
    if (!ac[b].is_zero() && !spec.contains_blade(static_cast<Blade>(b))) return false;
  }
  return true;
}

/// Scalar part <a>_0.
template <class S>
const S& scalar_part(const BasicMultivector<S>& a) {
  return a[0];
}

enum class BracketKind { Commutator, Anticommutator };

template <class S>
BasicMultivector<S> bracket(const BasicMultivector<S>& a, const BasicMultivector<S>& b,
                            BracketKind kind) {
  if (kind == BracketKind::Commutator) return a * b - b * a;
  return a * b + b * a;
}

template <class S>
BasicMultivector<S> commutator(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return bracket(a, b, BracketKind::Commutator);
}

template <class S>
BasicMultivector<S> anticommutator(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return bracket(a, b, BracketKind::Anticommutator);
}

/// Canonical text form: terms in ascending blade order, `c` for the identity
/// blade and `c*e12` otherwise (`e12` alone when c = 1); zero prints `0`.
std::string to_string(const Multivector& a);
std::ostream& operator<<(std::ostream& os, const Multivector& a);

/// Componentwise maximum modulus.
double max_abs(const FloatMultivector& a);

FloatMultivector to_float(const Multivector& a);

}  // namespace cliffaut
