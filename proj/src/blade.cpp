#include "cliffaut/blade.hpp"

#include <stdexcept>

#include "cliffaut/subspace.hpp"

namespace cliffaut {

BladeProduct basis_blade_product(Blade a, Blade b, const Signature& sig) {
  const Blade limit = static_cast<Blade>(sig.dimension());
  if (a >= limit || b >= limit) throw std::out_of_range("blade outside the signature");
  return blade_product_unchecked(a, b, sig.negative_mask());
}

Blade blade_from_indices(std::initializer_list<int> indices) {
  Blade b = 0;
  for (int a : indices) {
    if (a < 1 || a > 31) throw std::out_of_range("generator index out of range");
    const Blade bit = Blade{1} << (a - 1);
    if (b & bit) throw std::invalid_argument("repeated generator index");
    b |= bit;
  }
  return b;
}

std::string blade_text(Blade b, int n) {
  std::string out = "e";
  if (n <= 9) {
    for (int a = 1; a <= n; ++a) {
      if (b & (Blade{1} << (a - 1))) out += static_cast<char>('0' + a);
    }
    return out;
  }
  out += "{";
  bool first = true;
  for (int a = 1; a <= n; ++a) {
    if (!(b & (Blade{1} << (a - 1)))) continue;
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

// --- SubspaceSpec -----------------------------------------------------------

namespace {

void check_n(int n) {
  if (n < 0 || n > 31) throw std::invalid_argument("subspace dimension out of range");
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << (n + 1)) - 1; }

}  // namespace

SubspaceSpec SubspaceSpec::grade(int n, int k) {
  check_n(n);
  if (k < 0 || k > n) throw std::invalid_argument("grade out of range");
  return SubspaceSpec(n, std::uint32_t{1} << k);
}

SubspaceSpec SubspaceSpec::parity(int n, int j) {
  check_n(n);
  if (j != 0 && j != 1) throw std::invalid_argument("parity must be 0 or 1");
  std::uint32_t mask = 0;
  for (int k = j; k <= n; k += 2) mask |= std::uint32_t{1} << k;
  return SubspaceSpec(n, mask);
}

SubspaceSpec SubspaceSpec::bar(int n, int m) {
  check_n(n);
  if (m < 0 || m > 3) throw std::invalid_argument("quaternion type must be in [0, 3]");
  std::uint32_t mask = 0;
  for (int k = m; k <= n; k += 4) mask |= std::uint32_t{1} << k;
  return SubspaceSpec(n, mask);
}

SubspaceSpec SubspaceSpec::center(int n) {
  check_n(n);
  std::uint32_t mask = 1;
  if (n % 2 == 1) mask |= std::uint32_t{1} << n;
  return SubspaceSpec(n, mask);
}

SubspaceSpec SubspaceSpec::all(int n) {
  check_n(n);
  return SubspaceSpec(n, full_mask(n));
}

SubspaceSpec SubspaceSpec::none(int n) {
  check_n(n);
  return SubspaceSpec(n, 0);
}

SubspaceSpec SubspaceSpec::grades(int n, std::initializer_list<int> ks) {
  return grades(n, std::vector<int>(ks));
}

SubspaceSpec SubspaceSpec::grades(int n, const std::vector<int>& ks) {
  check_n(n);
  std::uint32_t mask = 0;
  for (int k : ks) {
    if (k >= 0 && k <= n) mask |= std::uint32_t{1} << k;
  }
  return SubspaceSpec(n, mask);
}

SubspaceSpec SubspaceSpec::operator|(const SubspaceSpec& other) const {
  if (other.n_ != n_) throw std::invalid_argument("subspaces of different algebras");
  return SubspaceSpec(n_, mask_ | other.mask_);
}

SubspaceSpec SubspaceSpec::operator&(const SubspaceSpec& other) const {
  if (other.n_ != n_) throw std::invalid_argument("subspaces of different algebras");
  return SubspaceSpec(n_, mask_ & other.mask_);
}

std::vector<int> SubspaceSpec::grade_list() const {
  std::vector<int> out;
  for (int k = 0; k <= n_; ++k) {
    if (contains_grade(k)) out.push_back(k);
  }
  return out;
}

long long SubspaceSpec::dimension() const {
  long long total = 0;
  for (int k : grade_list()) total += binomial(n_, k);
  return total;
}

std::vector<Blade> SubspaceSpec::blades() const {
  std::vector<Blade> out;
  const Blade limit = Blade{1} << n_;
  for (Blade b = 0; b < limit; ++b) {
    if (contains_blade(b)) out.push_back(b);
  }
  return out;
}

std::string SubspaceSpec::to_string() const {
  if (empty()) return "{}";
  std::string out = "C^{";
  bool first = true;
  for (int k : grade_list()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cliffaut
