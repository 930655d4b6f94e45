#include "cliffaut/lie.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "cliffaut/groups.hpp"
#include "cliffaut/matrix_rep.hpp"

namespace cliffaut {

namespace {

using Kind = GroupId::Kind;

int mod(int a, int m) { return ((a % m) + m) % m; }

bool is_gamma(const GroupId& g) { return g.kind() == Kind::GammaGrade && g.first() == 1; }

bool is_full(const GroupId& g) {
  return g.kind() == Kind::Full || (g.kind() == Kind::GammaGrade && g.first() == 0);
}

// r + s*sqrt(2) with rational r, s.
struct Surd {
  mpq_class r;
  mpq_class s;
};

Surd operator*(const Surd& a, const Surd& b) {
  return {a.r * b.r + 2 * a.s * b.s, a.r * b.s + a.s * b.r};
}

mpq_class power_of_two(int k) {
  mpq_class x(1);
  if (k >= 0) {
    x.get_num() <<= k;
  } else {
    x.get_den() <<= -k;
  }
  x.canonicalize();
  return x;
}

// 2^(m/2).
Surd sqrt2_power(int m) {
  if (m % 2 == 0) return {power_of_two(m / 2), 0};
  return {0, power_of_two((m - 1) / 2)};
}

// cos(pi k / 4).
Surd cos_quarter_pi(int k) {
  const mpq_class half(1, 2);
  switch (mod(k, 8)) {
    case 0:
      return {1, 0};
    case 1:
      return {0, half};
    case 2:
      return {0, 0};
    case 3:
      return {0, -half};
    case 4:
      return {-1, 0};
    case 5:
      return {0, -half};
    case 6:
      return {0, 0};
    default:
      return {0, half};
  }
}

Surd sin_quarter_pi(int k) { return cos_quarter_pi(k - 2); }

// 2^a - 2^(m/2) * trig + c, required to be an integer.
long long evaluate(int a, int m, const Surd& trig, int c) {
  const Surd t = sqrt2_power(m) * trig;
  if (t.s != 0) throw std::logic_error("dimension formula left an irrational part");
  const mpq_class value = power_of_two(a) - t.r + c;
  if (value.get_den() != 1) throw std::logic_error("dimension formula is not an integer");
  return value.get_num().get_si();
}

}  // namespace

LieAlgebraSpec lie_spec(const GroupId& g, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const bool odd = n % 2 == 1;
  const SubspaceSpec scalar = SubspaceSpec::grade(n, 0);
  const SubspaceSpec top = SubspaceSpec::grade(n, n);
  const SubspaceSpec bar2 = SubspaceSpec::bar(n, 2);
  SubspaceSpec spec = SubspaceSpec::none(n);
  if (is_full(g)) {
    spec = SubspaceSpec::all(n);
  } else if (is_gamma(g)) {
    spec = SubspaceSpec::grades(n, {0, 2});
    if (odd) spec = spec | top;
  } else {
    switch (g.kind()) {
      case Kind::P:
        spec = SubspaceSpec::parity(n, 0);
        if (odd) spec = spec | top;
        break;
      case Kind::A:
        spec = scalar | bar2 | SubspaceSpec::bar(n, 3);
        if (mod(n, 4) == 1) spec = spec | top;
        break;
      case Kind::B:
        spec = scalar | SubspaceSpec::bar(n, 1) | bar2;
        if (mod(n, 4) == 3) spec = spec | top;
        break;
      case Kind::Q:
        spec = scalar | bar2;
        if (odd) spec = spec | top;
        break;
      case Kind::QPrime:
        spec = scalar | bar2;
        if (odd || mod(n, 4) == 0) spec = spec | top;
        break;
      default:
        throw UnsupportedGroup("no Lie algebra row for " + g.name());
    }
  }
  return {g, n, spec};
}

LieAlgebraSpec lie_spec(const GroupId& g, const Signature& sig) { return lie_spec(g, sig.n()); }

long long dim_formula(const GroupId& g, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const bool odd = n % 2 == 1;
  if (is_full(g)) return 1LL << n;
  if (is_gamma(g)) return static_cast<long long>(n) * (n - 1) / 2 + (odd ? 2 : 1);
  switch (g.kind()) {
    case Kind::P:
      return (1LL << (n - 1)) + (odd ? 1 : 0);
    case Kind::A:
      return evaluate(n - 1, n - 1, sin_quarter_pi(n + 1), mod(n, 4) == 1 ? 2 : 1);
    case Kind::B:
      return evaluate(n - 1, n - 1, cos_quarter_pi(n + 1), mod(n, 4) == 3 ? 2 : 1);
    case Kind::Q:
      return evaluate(n - 2, n - 2, cos_quarter_pi(n), odd ? 2 : 1);
    case Kind::QPrime:
      return evaluate(n - 2, n - 2, cos_quarter_pi(n), (odd || mod(n, 4) == 0) ? 2 : 1);
    default:
      throw UnsupportedGroup("no dimension formula for " + g.name());
  }
}

long long bar2_dim_formula(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return evaluate(n - 2, n - 2, cos_quarter_pi(n), 0);
}

std::vector<GroupId> lie_groups() {
  return {GroupId::full(), GroupId::gamma(), GroupId::p(), GroupId::a(),
          GroupId::b(),    GroupId::q(),     GroupId::q_prime()};
}

Closure closure_check(const SubspaceSpec& spec, const Signature& sig) {
  require_spec_matches(spec, sig);
  if (sig.n() > 8) throw std::invalid_argument("closure_check supports n <= 8");
  const std::uint32_t neg = sig.negative_mask();
  const auto blades = spec.blades();
  for (Blade a : blades) {
    for (Blade b : blades) {
      const BladeProduct ab = blade_product_unchecked(a, b, neg);
      const BladeProduct ba = blade_product_unchecked(b, a, neg);
      // [A, B] = (s_ab - s_ba) e_{A xor B}.
      if (ab.sign != ba.sign && !spec.contains_blade(ab.blade)) return {false, std::pair{a, b}};
    }
  }
  return {};
}

namespace {

// Largest modulus among the components of x outside spec.
double outside(const FloatMultivector& x, const SubspaceSpec& spec) {
  double worst = 0.0;
  const auto c = x.coefficients();
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (!spec.contains_blade(static_cast<Blade>(b))) worst = std::max(worst, std::abs(c[b]));
  }
  return worst;
}

double relative_outside(const FloatMultivector& x, const SubspaceSpec& spec) {
  return outside(x, spec) / std::max(1.0, max_abs(x));
}

}  // namespace

double membership_residual(const GroupId& g, const FloatMultivector& x, const FloatMultivector& x_inv) {
  const Signature& sig = x.signature();
  const int n = sig.n();
  const SubspaceSpec center = SubspaceSpec::center(n);
  const SubspaceSpec ends = SubspaceSpec::grades(n, {0, n});
  auto p_residual = [&] { return relative_outside(grade_involution(x) * x_inv, center); };
  auto psi_of = [&] { return reverse(x) * x; };
  switch (g.kind()) {
    case Kind::Full:
      return 0.0;
    case Kind::GammaGrade:
    case Kind::GammaParity:
    case Kind::GammaBar:
    case Kind::GammaBarPair: {
      const SubspaceSpec spec = preserved_subspace(g, n);
      double worst = 0.0;
      for (Blade b : spec.blades()) {
        worst = std::max(worst, relative_outside(x.times_blade(b) * x_inv, spec));
      }
      return worst;
    }
    case Kind::P:
      return p_residual();
    case Kind::A:
      return relative_outside(psi_of(), center);
    case Kind::APrime:
      return relative_outside(psi_of(), ends);
    case Kind::B:
      return relative_outside(grade_involution(reverse(x)) * x, center);
    case Kind::BPrime:
      return relative_outside(grade_involution(reverse(x)) * x, ends);
    case Kind::Q:
      return std::max(p_residual(), relative_outside(psi_of(), center));
    case Kind::QPrime:
      return std::max(p_residual(), relative_outside(psi_of(), ends));
    default:
      throw UnsupportedGroup("no floating membership test for " + g.name());
  }
}

ExpMembership exp_membership_check(const GroupId& g, const Signature& sig, std::uint64_t seed,
                                   int trials, double tol) {
  if (sig.n() > 5) throw std::invalid_argument("exp_membership_check supports n <= 5");
  const Signature fsig = sig.with_backend(Backend::Float);
  const SubspaceSpec spec = lie_spec(g, sig).spec;
  Rng rng(seed);
  ExpMembership out;
  for (int t = 0; t < trials; ++t) {
    std::vector<FloatScalar> c(fsig.dimension());
    for (Blade b : spec.blades()) {
      const double re = rng.unit() - 0.5;
      const double im = sig.is_complex() ? rng.unit() - 0.5 : 0.0;
      c[b] = FloatScalar(re, im);
    }
    const FloatMultivector x(fsig, std::move(c));
    const FloatMultivector ex = exp_mv(x);
    const FloatMultivector ex_inv = exp_mv(-x);
    const FloatMultivector unit = ex * ex_inv - FloatMultivector::scalar(fsig, 1.0);
    const double residual = std::max(membership_residual(g, ex, ex_inv), max_abs(unit));
    out.max_residual = std::max(out.max_residual, residual);
    ++out.trials;
    if (residual >= tol && out.passed) {
      out.passed = false;
      out.diagnostic = "trial " + std::to_string(t) + ": residual " + std::to_string(residual) + " for " +
                       g.name() + " in " + sig.name();
    }
  }
  return out;
}

}  // namespace cliffaut
