#include "cliffaut/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace cliffaut {

Exact Exact::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  return Exact(q);
}

Exact& Exact::operator+=(const Exact& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Exact& Exact::operator-=(const Exact& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Exact& Exact::operator*=(const Exact& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Exact& Exact::operator/=(const Exact& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void add_product(Exact& acc, int sign, const Exact& a, const Exact& b) {
  thread_local mpq_class tmp;
  if (a.is_real() && b.is_real()) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    if (sign > 0) {
      mpq_add(acc.re_.get_mpq_t(), acc.re_.get_mpq_t(), tmp.get_mpq_t());
    } else {
      mpq_sub(acc.re_.get_mpq_t(), acc.re_.get_mpq_t(), tmp.get_mpq_t());
    }
    return;
  }
  Exact p = a * b;
  if (sign > 0) {
    acc += p;
  } else {
    acc -= p;
  }
}

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Exact::to_string() const {
  if (is_real()) return rational_text(re_);
  std::string imag_part;
  if (im_ == 1) {
    imag_part = "i";
  } else if (im_ == -1) {
    imag_part = "-i";
  } else {
    imag_part = rational_text(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag_part;
  std::string out = rational_text(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag_part;
}

bool Exact::prints_negative() const {
  if (is_real()) return sgn(re_) < 0;
  return sgn(re_) == 0 && sgn(im_) < 0;
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.to_string(); }

}  // namespace cliffaut
