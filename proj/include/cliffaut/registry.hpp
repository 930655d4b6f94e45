#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliffaut/group_id.hpp"
#include "cliffaut/signature.hpp"

namespace cliffaut {

struct GroupClaim {
  GroupId group;
  bool expected;
};

/// A computed value that an entry pins down. The expression may use T.
struct ValueClaim {
  enum class Kind { Equals, NonZero, NonZeroScalar };

  std::string expression;
  Kind kind = Kind::Equals;
  /// Canonical text of the expected value, for Equals.
  std::string expected;
  /// Signatures the claim applies to; empty means every admissible one.
  std::vector<Signature> only_in;
};

/// An explicit element that separates groups, with the signatures where it
/// is meaningful and the exact memberships and values it must reproduce.
struct CounterexampleEntry {
  std::string id;
  std::string element;
  std::string constraint;
  std::function<bool(const Signature&)> admissible;
  std::vector<GroupClaim> claims;
  std::vector<ValueClaim> values;
  /// The statement the entry witnesses.
  std::string statement;
};

const std::vector<CounterexampleEntry>& default_registry();

/// Every real signature Cl(p, n - p) followed by Cl(C^n).
std::vector<Signature> signatures_of_dimension(int n);

}  // namespace cliffaut
