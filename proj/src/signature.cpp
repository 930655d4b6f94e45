#include "cliffaut/signature.hpp"

#include <stdexcept>

namespace cliffaut {

Signature Signature::real(int p, int q, Backend backend) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative metric count");
  if (p + q < 1 || p + q > kMaxGenerators) {
    throw std::invalid_argument("dimension n = p + q must lie in [1, " +
                                std::to_string(kMaxGenerators) + "]");
  }
  return Signature(p, q, Field::Real, backend);
}

Signature Signature::complex(int n, Backend backend) {
  if (n < 1 || n > kMaxGenerators) {
    throw std::invalid_argument("dimension n must lie in [1, " +
                                std::to_string(kMaxGenerators) + "]");
  }
  return Signature(n, 0, Field::Complex, backend);
}

int Signature::metric(int a) const {
  if (a < 1 || a > n()) throw std::out_of_range("generator index out of range");
  return a <= p_ ? 1 : -1;
}

Signature Signature::with_backend(Backend backend) const {
  return Signature(p_, q_, field_, backend);
}

std::string Signature::name() const {
  if (is_complex()) return "Cl(C^" + std::to_string(n()) + ")";
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

}  // namespace cliffaut
