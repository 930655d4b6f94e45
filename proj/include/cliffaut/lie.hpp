#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cliffaut/group_id.hpp"
#include "cliffaut/multivector.hpp"
#include "cliffaut/subspace.hpp"

namespace cliffaut {

/// The Lie algebra of one of the groups, as a graded subspace under the
/// commutator.
struct LieAlgebraSpec {
  GroupId group;
  int n = 0;
  SubspaceSpec spec;
};

/// Supported: Full, Gamma^0 (= Full), Gamma, P, A, B, Q, Q'. Anything else
/// throws UnsupportedGroup.
LieAlgebraSpec lie_spec(const GroupId& g, int n);
LieAlgebraSpec lie_spec(const GroupId& g, const Signature& sig);

/// Closed-form dimension of the Lie algebra, evaluated exactly.
long long dim_formula(const GroupId& g, int n);

/// 2^(n-2) - 2^((n-2)/2) cos(pi n / 4), the number of blades with grade 2 mod 4.
long long bar2_dim_formula(int n);

/// The groups that have a Lie algebra row.
std::vector<GroupId> lie_groups();

struct Closure {
  bool closed = true;
  std::optional<std::pair<Blade, Blade>> witness;

  explicit operator bool() const { return closed; }
};

/// True iff [A, B] lies in spec for every pair of blades A, B of spec.
/// Requires n <= 8.
Closure closure_check(const SubspaceSpec& spec, const Signature& sig);

struct ExpMembership {
  bool passed = true;
  int trials = 0;
  double max_residual = 0.0;
  std::string diagnostic;

  explicit operator bool() const { return passed; }
};

/// Samples x in the Lie algebra of g with coefficients in [-1/2, 1/2],
/// forms exp(x) and checks the floating analog of membership in g: every
/// component that the group definition forces to vanish must stay below
/// tol times the size of the quantity. Requires n <= 5.
ExpMembership exp_membership_check(const GroupId& g, const Signature& sig, std::uint64_t seed,
                                   int trials, double tol = 1e-9);

/// Floating residual of the membership conditions of g for x with known
/// inverse x_inv. Zero means exact membership.
double membership_residual(const GroupId& g, const FloatMultivector& x, const FloatMultivector& x_inv);

}  // namespace cliffaut
