#pragma once

#include <vector>

#include "cliffaut/linalg.hpp"
#include "cliffaut/multivector.hpp"
#include "cliffaut/subspace.hpp"

namespace cliffaut {

/// Left-regular representation: column b holds the coefficients of a * e_b.
struct LeftMatrix {
  Signature sig;
  ExactMatrix entries;

  friend bool operator==(const LeftMatrix&, const LeftMatrix&) = default;
};

LeftMatrix left_matrix(const Multivector& a);

/// Two-sided inverse. Throws SingularError when a is not invertible.
///
/// When one of rev(a)*a, cj(a)*a, hat(a)*a is a nonzero scalar s the inverse
/// is read off as x/s; otherwise the left-regular system L(a) x = e is solved
/// by exact elimination.
Multivector inverse(const Multivector& a);

/// Inverse computed only through the left-regular linear solve.
Multivector inverse_by_elimination(const Multivector& a);

bool is_invertible(const Multivector& a);

/// Basis of {U : [U, B] = 0 for every blade B of spec}, computed as the exact
/// nullspace of the stacked commutator operators. Basis vectors that are
/// single blades are normalized to coefficient 1. Requires n <= 8.
std::vector<Multivector> centralizer_basis(const SubspaceSpec& spec, const Signature& sig);

/// exp(a) by scaling and squaring a truncated power series of L(a); the
/// series is cut once its remainder bound drops below tol.
FloatMultivector exp_mv(const FloatMultivector& a, double tol = 1e-12);

}  // namespace cliffaut
