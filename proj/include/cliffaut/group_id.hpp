#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cliffaut {

/// Identifies one of the groups of inner automorphisms studied here.
///
/// Conjugation-defined families carry their parameters: GammaGrade(k) keeps
/// C^k invariant, GammaParity(j) keeps C^(j), GammaBar(m) keeps the grades
/// congruent to m mod 4, GammaBarPair(k,l) keeps the sum of two such classes.
class GroupId {
 public:
  enum class Kind {
    Full,
    GammaGrade,
    GammaParity,
    GammaBar,
    GammaBarPair,
    P,
    A,
    APrime,
    B,
    BPrime,
    Q,
    QPrime,
    Lipschitz,
    Pin,
    Spin,
  };

  static GroupId full() { return GroupId(Kind::Full); }
  static GroupId gamma_grade(int k) { return GroupId(Kind::GammaGrade, k); }
  /// The Clifford group, which keeps the vectors C^1 invariant.
  static GroupId gamma() { return gamma_grade(1); }
  static GroupId gamma_parity(int j) { return GroupId(Kind::GammaParity, j); }
  static GroupId gamma_bar(int m) { return GroupId(Kind::GammaBar, m); }
  /// Parameters are stored sorted; k == l is rejected by validate().
  static GroupId gamma_bar_pair(int k, int l);
  static GroupId p() { return GroupId(Kind::P); }
  static GroupId a() { return GroupId(Kind::A); }
  static GroupId a_prime() { return GroupId(Kind::APrime); }
  static GroupId b() { return GroupId(Kind::B); }
  static GroupId b_prime() { return GroupId(Kind::BPrime); }
  static GroupId q() { return GroupId(Kind::Q); }
  static GroupId q_prime() { return GroupId(Kind::QPrime); }
  static GroupId lipschitz() { return GroupId(Kind::Lipschitz); }
  static GroupId pin() { return GroupId(Kind::Pin); }
  static GroupId spin() { return GroupId(Kind::Spin); }

  /// Parses `Gamma`, `GammaGrade:k`, `GammaParity:j`, `GammaBar:m`,
  /// `GammaBarPair:kl`, `P`, `A`, `APrime`, `B`, `BPrime`, `Q`, `QPrime`,
  /// `Lipschitz`, `Pin`, `Spin`, `Full`. Throws std::invalid_argument.
  static GroupId parse(const std::string& text);

  Kind kind() const { return kind_; }
  int first() const { return a_; }
  int second() const { return b_; }

  /// Throws std::invalid_argument if the parameters do not fit n generators.
  void validate(int n) const;

  bool is_conjugation_defined() const;

  /// Mathematical name, e.g. `Gamma^2`, `Gamma^(0)`, `Gamma^bar03`, `Q'`, `C^x`.
  std::string name() const;
  /// Name accepted by parse(), e.g. `GammaBarPair:03`.
  std::string cli_name() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;

 private:
  explicit GroupId(Kind kind, int a = 0, int b = 0) : kind_(kind), a_(a), b_(b) {}

  Kind kind_ = Kind::Full;
  int a_ = 0;
  int b_ = 0;
};

/// Every group that appears in the small-dimension coincidence catalogs:
/// C^x, Gamma^k for k = 0..n, both parity groups, the four quaternion-type
/// groups, the four two-class groups, and P, A, B, Q, Q'.
std::vector<GroupId> catalog_groups(int n);

}  // namespace cliffaut
