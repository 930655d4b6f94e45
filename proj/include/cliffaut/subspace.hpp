#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliffaut/blade.hpp"

namespace cliffaut {

/// A graded subspace of the algebra with n generators, stored as a set of
/// grades in [0, n].
class SubspaceSpec {
 public:
  /// C^k.
  static SubspaceSpec grade(int n, int k);
  /// C^(j): grades congruent to j mod 2.
  static SubspaceSpec parity(int n, int j);
  /// Quaternion-type class: grades congruent to m mod 4.
  static SubspaceSpec bar(int n, int m);
  /// C^0 for even n, C^0 + C^n for odd n.
  static SubspaceSpec center(int n);
  static SubspaceSpec all(int n);
  static SubspaceSpec none(int n);
  /// Grades outside [0, n] are dropped.
  static SubspaceSpec grades(int n, std::initializer_list<int> ks);
  static SubspaceSpec grades(int n, const std::vector<int>& ks);

  SubspaceSpec operator|(const SubspaceSpec& other) const;
  SubspaceSpec operator&(const SubspaceSpec& other) const;

  int n() const { return n_; }
  bool contains_grade(int k) const { return k >= 0 && k <= n_ && ((mask_ >> k) & 1u); }
  bool contains_blade(Blade b) const { return (mask_ >> cliffaut::grade(b)) & 1u; }
  bool empty() const { return mask_ == 0; }
  std::vector<int> grade_list() const;
  std::uint32_t grade_mask() const { return mask_; }

  /// Number of canonical blades spanning the subspace.
  long long dimension() const;

  /// Blades spanning the subspace, ascending.
  std::vector<Blade> blades() const;

  /// "C^{0,2,5}"; the empty subspace prints "{}".
  std::string to_string() const;

  friend bool operator==(const SubspaceSpec&, const SubspaceSpec&) = default;

 private:
  SubspaceSpec(int n, std::uint32_t mask) : n_(n), mask_(mask) {}

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Binomial coefficient C(n, k) for small n.
long long binomial(int n, int k);

}  // namespace cliffaut
