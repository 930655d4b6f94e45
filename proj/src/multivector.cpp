#include "cliffaut/multivector.hpp"

#include <algorithm>
#include <ostream>

namespace cliffaut {

namespace {

// Coefficient text for a non-identity blade term, without sign handling.
std::string coefficient_prefix(const Exact& c) {
  if (c.is_one()) return "";
  if (c == Exact::imaginary_unit()) return "i*";
  const std::string s = c.to_string();
  if (!c.is_real() && sgn(c.real()) != 0) return "(" + s + ")*";
  return s + "*";
}

}  // namespace

std::string to_string(const Multivector& a) {
  const int n = a.signature().n();
  const auto support = a.support();
  if (support.empty()) return "0";
  std::string out;
  bool first = true;
  for (Blade b : support) {
    Exact c = a[b];
    const bool negative = c.prints_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (b == 0) {
      out += c.to_string();
    } else {
      out += coefficient_prefix(c) + blade_text(b, n);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) { return os << to_string(a); }

double max_abs(const FloatMultivector& a) {
  double m = 0.0;
  for (const auto& c : a.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

FloatMultivector to_float(const Multivector& a) {
  std::vector<FloatScalar> c;
  c.reserve(a.size());
  for (const auto& x : a.coefficients()) c.push_back(x.to_complex());
  return FloatMultivector(a.signature(), std::move(c));
}

}  // namespace cliffaut
