#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace cliffaut {

/// Exact scalar: a Gaussian rational re + im*i.
///
/// Real algebras only ever hold values with a zero imaginary part; the
/// arithmetic keeps a fast path for that case so real workloads pay for a
/// single mpq operation per multiply.
class Exact {
 public:
  Exact() = default;
  Exact(long value) : re_(value) {}  // NOLINT: implicit from integers
  Exact(int value) : re_(value) {}   // NOLINT
  explicit Exact(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Exact(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Exact fraction(long num, long den);
  static Exact imaginary_unit() { return Exact(mpq_class(0), mpq_class(1)); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Exact operator-() const { return Exact(-re_, -im_); }
  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Exact& o);
  /// Throws std::domain_error on division by zero.
  Exact& operator/=(const Exact& o);

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }
  friend bool operator==(const Exact& a, const Exact& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// acc += sign * a * b, with sign in {-1, +1}.
  friend void add_product(Exact& acc, int sign, const Exact& a, const Exact& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// `a/b`, `c/d*i`, or `a/b+c/d*i`.
  std::string to_string() const;

  /// True when the value prints with a leading minus sign in a sum, i.e. it is
  /// a negative real or a negative pure imaginary.
  bool prints_negative() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

void add_product(Exact& acc, int sign, const Exact& a, const Exact& b);

std::ostream& operator<<(std::ostream& os, const Exact& x);

using FloatScalar = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static bool is_zero(const Exact& s) { return s.is_zero(); }
  static void add_product(Exact& acc, int sign, const Exact& a, const Exact& b) {
    cliffaut::add_product(acc, sign, a, b);
  }
};

template <>
struct ScalarTraits<FloatScalar> {
  static bool is_zero(const FloatScalar& s) { return s == FloatScalar(0.0); }
  static void add_product(FloatScalar& acc, int sign, const FloatScalar& a,
                          const FloatScalar& b) {
    if (sign > 0) {
      acc += a * b;
    } else {
      acc -= a * b;
    }
  }
};

}  // namespace cliffaut
