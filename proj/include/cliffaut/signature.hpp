#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace cliffaut {

enum class Field { Real, Complex };
enum class Backend { Exact, Float };

/// Hard cap on the number of generators; a multivector stores 2^n scalars.
inline constexpr int kMaxGenerators = 12;

/// Algebra descriptor for Cl(p,q) or the complex algebra Cl(C^n).
///
/// Generators e_1..e_p square to +1 and e_{p+1}..e_n to -1. The complex
/// algebra always has q = 0 and the identity metric.
class Signature {
 public:
  /// Throws std::invalid_argument when p, q are negative or n is outside [1, 12].
  static Signature real(int p, int q, Backend backend = Backend::Exact);
  static Signature complex(int n, Backend backend = Backend::Exact);

  int n() const { return p_ + q_; }
  int p() const { return p_; }
  int q() const { return q_; }
  Field field() const { return field_; }
  Backend backend() const { return backend_; }
  bool is_complex() const { return field_ == Field::Complex; }

  /// Number of canonical basis blades, 2^n.
  std::size_t dimension() const { return std::size_t{1} << n(); }

  /// Bitmask of the generators squaring to -1.
  std::uint32_t negative_mask() const {
    return ((std::uint32_t{1} << n()) - 1) & ~((std::uint32_t{1} << p_) - 1);
  }

  /// Diagonal metric entry for the 1-based generator index a.
  int metric(int a) const;

  Signature with_backend(Backend backend) const;

  /// "Cl(3,1)" or "Cl(C^4)".
  std::string name() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  Signature(int p, int q, Field field, Backend backend)
      : p_(p), q_(q), field_(field), backend_(backend) {}

  int p_ = 0;
  int q_ = 0;
  Field field_ = Field::Real;
  Backend backend_ = Backend::Exact;
};

}  // namespace cliffaut
