#include <doctest.h>

#include <random>

#include "cliffaut/errors.hpp"
#include "cliffaut/expression.hpp"
#include "cliffaut/groups.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cliffaut;

namespace {

bool central(const Multivector& x) {
  const auto blades = oracle::central_blades(x.signature());
  for (Blade b = 0; b < x.signature().dimension(); ++b) {
    if (!x[b].is_zero() && std::find(blades.begin(), blades.end(), b) == blades.end()) return false;
  }
  return true;
}

bool in_zero_or_top(const Multivector& x) {
  const Blade top = pseudoscalar(x.signature().n());
  for (Blade b = 1; b < x.signature().dimension(); ++b) {
    if (!x[b].is_zero() && b != top) return false;
  }
  return true;
}

bool homogeneous(const Multivector& t) {
  return oracle::hat(t) == t || oracle::hat(t) == -t;
}

// Membership straight from the definitions, on top of the oracle product.
bool expected_member(const Multivector& t, const GroupId& g) {
  const Signature& sig = t.signature();
  using K = GroupId::Kind;
  auto grade_is = [](int k) { return [k](Blade b) { return grade(b) == k; }; };
  auto parity_is = [](int j) { return [j](Blade b) { return grade(b) % 2 == j; }; };
  auto bar_in = [&](int k, int l) { return [&sig, k, l](Blade b) {
    const int m = oracle::bar_type(b, sig);
    return m == k || m == l;
  }; };
  const Multivector inv = *oracle::inverse(t);
  const Multivector psi_t = oracle::product(oracle::reverse(t), t);
  const Multivector chi_t = oracle::product(oracle::hat(oracle::reverse(t)), t);
  const bool in_p = central(oracle::product(oracle::hat(t), inv));
  switch (g.kind()) {
    case K::Full:
      return true;
    case K::GammaGrade:
      return oracle::conjugation_preserves(t, grade_is(g.first()), grade_is(g.first()));
    case K::GammaParity:
      return oracle::conjugation_preserves(t, parity_is(g.first()), parity_is(g.first()));
    case K::GammaBar:
      return oracle::conjugation_preserves(t, bar_in(g.first(), g.first()), bar_in(g.first(), g.first()));
    case K::GammaBarPair:
      return oracle::conjugation_preserves(t, bar_in(g.first(), g.second()), bar_in(g.first(), g.second()));
    case K::P:
      return in_p;
    case K::A:
      return central(psi_t);
    case K::APrime:
      return in_zero_or_top(psi_t);
    case K::B:
      return central(chi_t);
    case K::BPrime:
      return in_zero_or_top(chi_t);
    case K::Q:
      return in_p && central(psi_t);
    case K::QPrime:
      return in_p && in_zero_or_top(psi_t);
    case K::Lipschitz:
      return homogeneous(t) && expected_member(t, GroupId::gamma());
    case K::Pin:
      return expected_member(t, GroupId::lipschitz()) &&
             (psi_t == Multivector::scalar(sig, Exact(1)) || psi_t == Multivector::scalar(sig, Exact(-1)));
    case K::Spin:
      return expected_member(t, GroupId::pin()) && oracle::hat(t) == t;
  }
  return false;
}

std::vector<GroupId> all_groups(int n, bool real) {
  auto out = catalog_groups(n);
  for (const auto& g : {GroupId::a_prime(), GroupId::b_prime(), GroupId::lipschitz()}) out.push_back(g);
  if (real) {
    out.push_back(GroupId::pin());
    out.push_back(GroupId::spin());
  }
  return out;
}

std::vector<Multivector> test_elements(const Signature& sig, std::mt19937_64& rng) {
  std::vector<Multivector> out;
  for (const auto& entry : default_registry()) {
    if (entry.admissible(sig)) out.push_back(evaluate(entry.element, sig));
  }
  Rng lib_rng(rng());
  for (int parity = 0; parity < 2; ++parity) out.push_back(sample(family::HomogeneousInvertible{parity}, sig, lib_rng));
  out.push_back(sample(family::Versor{std::min(2, sig.n())}, sig, lib_rng));
  while (out.size() < 10) {
    const Multivector x = support::random_mv(sig, rng, 0.4);
    if (oracle::inverse(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("group ids parse and print") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : all_groups(n, true)) {
      CHECK(GroupId::parse(g.cli_name()) == g);
      CHECK_NOTHROW(g.validate(n));
    }
  }
  CHECK(GroupId::parse("Gamma") == GroupId::gamma_grade(1));
  CHECK(GroupId::parse("Gamma:3") == GroupId::gamma_grade(3));
  CHECK(GroupId::parse("GammaBarPair:30") == GroupId::gamma_bar_pair(0, 3));
  CHECK(GroupId::parse("Q'") == GroupId::q_prime());
  CHECK(GroupId::parse("A'") == GroupId::a_prime());
  CHECK(GroupId::q_prime().name() == "Q'");
  CHECK(GroupId::gamma_parity(0).name() == "Gamma^(0)");
  CHECK(GroupId::gamma_bar_pair(2, 3).name() == "Gamma^bar23");
  CHECK_THROWS_AS(GroupId::parse("Gamma:x"), std::invalid_argument);
  CHECK_THROWS_AS(GroupId::parse("R"), std::invalid_argument);
  CHECK_THROWS_AS(GroupId::gamma_grade(5).validate(4), std::invalid_argument);
  CHECK_THROWS_AS(GroupId::gamma_bar(4).validate(6), std::invalid_argument);
  CHECK_THROWS_AS(GroupId::gamma_bar_pair(1, 1).validate(6), std::invalid_argument);
}

TEST_CASE("membership matches the definitions") {
  std::mt19937_64 rng(31);
  for (const auto& sig : support::signatures(4)) {
    for (const auto& t : test_elements(sig, rng)) {
      MembershipOracle m(t);
      for (const auto& g : all_groups(sig.n(), !sig.is_complex())) {
        INFO(sig.name() << " " << to_string(t) << " " << g.name());
        CHECK(m.member(g) == expected_member(t, g));
      }
    }
  }
}

TEST_CASE("membership matches the definitions at n = 5") {
  std::mt19937_64 rng(32);
  for (const auto& sig : {Signature::real(5, 0), Signature::real(2, 3), Signature::complex(5)}) {
    for (const auto& t : test_elements(sig, rng)) {
      MembershipOracle m(t);
      for (const auto& g : {GroupId::gamma(), GroupId::gamma_grade(2), GroupId::p(), GroupId::a(), GroupId::b(),
                            GroupId::q(), GroupId::gamma_bar(2), GroupId::gamma_bar_pair(0, 1)}) {
        CHECK(m.member(g) == expected_member(t, g));
      }
    }
  }
}

TEST_CASE("psi and chi take values in their quaternion-type subspaces") {
  std::mt19937_64 rng(33);
  for (const auto& sig : support::signatures(6)) {
    const int n = sig.n();
    for (int i = 0; i < 20; ++i) {
      const Multivector t = support::random_mv(sig, rng);
      CHECK(psi(t) == oracle::product(oracle::reverse(t), t));
      CHECK(in_subspace(psi(t), SubspaceSpec::bar(n, 0) | SubspaceSpec::bar(n, 1)));
      CHECK(in_subspace(chi(t), SubspaceSpec::bar(n, 0) | SubspaceSpec::bar(n, 3)));
    }
  }
}

TEST_CASE("witness elements from the examples") {
  const Signature euclid4 = Signature::real(4, 0);
  const Multivector t = evaluate("e12 + 2*e34", euclid4);
  CHECK(to_string(psi(t)) == "5 - 4*e1234");
  CHECK(member(t, GroupId::p()));
  CHECK_FALSE(member(t, GroupId::a()));

  const Multivector u = evaluate("1 + 2*e123", euclid4);
  CHECK(to_string(psi(u)) == "5");
  CHECK(member(u, GroupId::a()));
  CHECK_FALSE(member(u, GroupId::q()));

  const Signature lorentz = Signature::real(1, 3);
  MembershipOracle w(evaluate("1 + e1234", lorentz));
  CHECK(to_string(w.conjugate(0b0001)) == "-e234");
  CHECK(w.member(GroupId::gamma_bar(2)));
  CHECK_FALSE(w.member(GroupId::gamma_bar(1)));
  const auto kept = w.preserves(SubspaceSpec::bar(4, 1));
  REQUIRE(kept.witness);
  CHECK(kept.witness->blade == 0b0001);

  const Signature euclid6 = Signature::real(6, 0);
  MembershipOracle x(evaluate("e12 + e3456", euclid6));
  CHECK(to_string(x.psi()) == "2");
  CHECK(to_string(x.conjugate(0b000001)) == "-e23456");
  CHECK(x.member(GroupId::q()));
  CHECK_FALSE(x.member(GroupId::gamma()));
}

TEST_CASE("Lipschitz, pin and spin") {
  const Signature sig = Signature::real(2, 1);
  CHECK(member(evaluate("e1", sig), GroupId::pin()));
  CHECK(member(evaluate("e12", sig), GroupId::spin()));
  CHECK_FALSE(member(evaluate("e1", sig), GroupId::spin()));
  CHECK(member(evaluate("2*e1", sig), GroupId::lipschitz()));
  CHECK_FALSE(member(evaluate("2*e1", sig), GroupId::pin()));
  CHECK_FALSE(member(evaluate("1 + e1", Signature::real(0, 2)), GroupId::lipschitz()));
  CHECK_THROWS_AS(member(evaluate("e1", Signature::complex(2)), GroupId::pin()), UnsupportedGroup);
}

TEST_CASE("singular elements are rejected") {
  const Signature sig = Signature::real(2, 0);
  CHECK_THROWS_AS(MembershipOracle(evaluate("1 + e1", sig)), NotInvertible);
  CHECK_THROWS_AS(member(Multivector(sig), GroupId::full()), NotInvertible);
}

TEST_CASE("vacuous preservation of a zero subspace") {
  // C^bar3 is zero for n <= 2, so every invertible element keeps it.
  const Signature sig = Signature::real(2, 0);
  CHECK(member(evaluate("1 + 2*e1", sig), GroupId::gamma_bar(3)));
  CHECK(preserves_subspace(evaluate("1 + 2*e1", sig), SubspaceSpec::bar(2, 3)).preserved);
}

TEST_CASE("the two P deciders agree") {
  std::mt19937_64 rng(34);
  for (const auto& sig : support::signatures(5)) {
    for (const auto& t : test_elements(sig, rng)) CHECK(member_p_by_parity_split(t) == member(t, GroupId::p()));
  }
}

TEST_CASE("samplers produce members") {
  for (const auto& sig : support::signatures(5)) {
    Rng rng(derive_seed(35, sig.name()));
    for (const auto& g : all_groups(sig.n(), !sig.is_complex())) {
      const Multivector t = sample(g, sig, rng);
      CHECK(expected_member(t, g));
    }
    for (int length = 0; length <= sig.n(); ++length) {
      const Multivector v = sample(family::Versor{length}, sig, rng);
      CHECK(expected_member(v, GroupId::gamma()));
      CHECK(psi(v).is_scalar());
    }
  }
}

TEST_CASE("sampling is deterministic") {
  const Signature sig = Signature::real(3, 2);
  CHECK(sample(GroupId::q(), sig, std::uint64_t{9}) == sample(GroupId::q(), sig, std::uint64_t{9}));
  CHECK(derive_seed(7, "a") != derive_seed(7, "b"));
  CHECK(derive_seed(7, "a") == derive_seed(7, "a"));
  Rng a(1), b(1);
  for (int i = 0; i < 100; ++i) {
    const long x = a.uniform(-3, 3);
    CHECK(x == b.uniform(-3, 3));
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
}

TEST_CASE("membership is invariant under scaling") {
  std::mt19937_64 rng(36);
  for (const auto& sig : support::signatures(4)) {
    for (const auto& t : test_elements(sig, rng)) {
      MembershipOracle a(t);
      MembershipOracle b(Exact::fraction(-2, 7) * t);
      for (const auto& g : all_groups(sig.n(), !sig.is_complex())) {
        if (g.kind() == GroupId::Kind::Pin || g.kind() == GroupId::Kind::Spin) continue;
        CHECK(a.member(g) == b.member(g));
      }
    }
  }
}
