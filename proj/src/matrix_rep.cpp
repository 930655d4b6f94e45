#include "cliffaut/matrix_rep.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace cliffaut {

LeftMatrix left_matrix(const Multivector& a) {
  const Signature& sig = a.signature();
  const std::size_t dim = sig.dimension();
  const std::uint32_t neg = sig.negative_mask();
  ExactMatrix m(dim, dim);
  for (Blade x : a.support()) {
    for (std::size_t b = 0; b < dim; ++b) {
      const BladeProduct p = blade_product_unchecked(x, static_cast<Blade>(b), neg);
      m(p.blade, b) = p.sign > 0 ? a[x] : -a[x];
    }
  }
  return {sig, std::move(m)};
}

Multivector inverse_by_elimination(const Multivector& a) {
  if (a.is_zero()) throw SingularError("zero has no inverse");
  const LeftMatrix l = left_matrix(a);
  std::vector<Exact> rhs(a.size());
  rhs[0] = Exact(1);
  auto x = solve(l.entries, rhs);
  if (!x) throw SingularError("element is not invertible: " + to_string(a));
  return Multivector(a.signature(), std::move(*x));
}

Multivector inverse(const Multivector& a) {
  if (a.is_zero()) throw SingularError("zero has no inverse");
  for (Involution kind :
       {Involution::Reversion, Involution::CliffordConjugation, Involution::GradeInvolution}) {
    const Multivector conj = involution(a, kind);
    const Multivector norm = conj * a;
    if (norm.is_scalar()) {
      if (norm[0].is_zero()) break;  // a divides zero: singular
      return (Exact(1) / norm[0]) * conj;
    }
  }
  return inverse_by_elimination(a);
}

bool is_invertible(const Multivector& a) {
  try {
    (void)inverse(a);
    return true;
  } catch (const SingularError&) {
    return false;
  }
}

std::vector<Multivector> centralizer_basis(const SubspaceSpec& spec, const Signature& sig) {
  require_spec_matches(spec, sig);
  if (sig.n() > 8) throw std::invalid_argument("centralizer_basis supports n <= 8");
  const std::size_t dim = sig.dimension();
  const std::uint32_t neg = sig.negative_mask();
  ExactMatrix constraints(0, dim);
  for (Blade blade : spec.blades()) {
    ExactMatrix block(dim, dim);
    for (std::size_t u = 0; u < dim; ++u) {
      const auto right = blade_product_unchecked(static_cast<Blade>(u), blade, neg);
      const auto left = blade_product_unchecked(blade, static_cast<Blade>(u), neg);
      const int diff = right.sign - left.sign;
      if (diff != 0) block(right.blade, u) = Exact(diff);
    }
    constraints.append_rows(block);
    constraints = row_reduce(std::move(constraints)).reduced;
  }
  std::vector<Multivector> out;
  for (auto& v : nullspace(constraints)) {
    Multivector x(sig, std::move(v));
    const auto support = x.support();
    if (support.size() == 1) x = Multivector::blade(sig, support.front());
    out.push_back(std::move(x));
  }
  return out;
}

FloatMultivector exp_mv(const FloatMultivector& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const Signature& sig = a.signature();
  const auto dim = static_cast<Eigen::Index>(sig.dimension());
  const std::uint32_t neg = sig.negative_mask();
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(dim, dim);
  for (Blade x : a.support()) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const BladeProduct p = blade_product_unchecked(x, static_cast<Blade>(b), neg);
      l(p.blade, b) = p.sign > 0 ? a[x] : -a[x];
    }
  }
  // Operator 1-norm.
  const double norm = l.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd scaled = l / std::ldexp(1.0, squarings);
  const double scaled_norm = norm / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  double term_bound = 1.0;  // bound on ||scaled^k / k!||
  for (int k = 1; k < 200; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    term_bound *= scaled_norm / k;
    // Tail after term k is bounded by a geometric series with ratio < 1/2.
    const double ratio = scaled_norm / (k + 1);
    const double tail = term_bound * ratio / (1.0 - ratio);
    if (tail < tol) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;

  std::vector<FloatScalar> c(sig.dimension());
  for (Eigen::Index r = 0; r < dim; ++r) c[r] = sum(r, 0);
  return FloatMultivector(sig, std::move(c));
}

}  // namespace cliffaut
