#include "cliffaut/registry.hpp"

namespace cliffaut {

namespace {

using G = GroupId;
using V = ValueClaim::Kind;

std::function<bool(const Signature&)> dimension_is(int n) {
  return [n](const Signature& s) { return s.n() == n; };
}

std::function<bool(const Signature&)> dimension_at_least(int n) {
  return [n](const Signature& s) { return s.n() >= n; };
}

int metric_product(const Signature& s, std::initializer_list<int> indices) {
  int out = 1;
  for (int a : indices) out *= s.metric(a);
  return out;
}

std::vector<CounterexampleEntry> build() {
  const Signature euclid4 = Signature::real(4, 0);
  const Signature euclid6 = Signature::real(6, 0);
  const Signature lorentz4 = Signature::real(1, 3);
  std::vector<CounterexampleEntry> r;

  r.push_back({"scalar-plus-vector",
               "1 + 2*e1",
               "n >= 2",
               dimension_at_least(2),
               {{G::full(), true},
                {G::gamma_grade(0), true},
                {G::b(), true},
                {G::p(), false},
                {G::a(), false},
                {G::q(), false},
                {G::gamma(), false}},
               {{"chi(T)", V::NonZeroScalar, "", {}}},
               "B contains a non-homogeneous element outside P and A"});

  r.push_back({"bivector-pair",
               "e12 + 2*e34",
               "n = 4",
               dimension_is(4),
               {{G::p(), true},
                {G::gamma_parity(0), true},
                {G::gamma_parity(1), true},
                {G::q_prime(), true},
                {G::a(), false},
                {G::q(), false},
                {G::gamma(), false}},
               {{"(e12 + 2*e34)*(e12 - 2*e34)", V::NonZeroScalar, "", {}},
                {"proj({4}, psi(T))", V::NonZero, "", {}},
                {"psi(T)", V::Equals, "5 - 4*e1234", {euclid4}}},
               "P is not A and Q is not Q' for n = 4"});

  r.push_back({"bivector-pair-high",
               "e12 + 2*e34",
               "n >= 5",
               dimension_at_least(5),
               {{G::p(), true},
                {G::q_prime(), false},
                {G::a(), false},
                {G::q(), false},
                {G::gamma(), false}},
               {{"(e12 + 2*e34)*(e12 - 2*e34)", V::NonZeroScalar, "", {}},
                {"proj({4}, psi(T))", V::NonZero, "", {}}},
               "P is not Q'; Q' and P differ for n = 8"});

  r.push_back({"scalar-plus-trivector",
               "1 + 2*e123",
               "n >= 4",
               dimension_at_least(4),
               {{G::a(), true},
                {G::a_prime(), true},
                {G::q(), false},
                {G::p(), false},
                {G::b(), false}},
               {{"psi(T)", V::NonZeroScalar, "", {}},
                {"psi(T)", V::Equals, "5", {euclid4}},
                {"chi(T)", V::Equals, "-3 + 4*e123", {euclid4}}},
               "A is strictly larger than Q for n >= 4"});

  r.push_back({"scalar-plus-pseudoscalar-4",
               "1 + 2*e1234",
               "n = 4",
               dimension_is(4),
               {{G::q_prime(), true},
                {G::p(), true},
                {G::a_prime(), true},
                {G::q(), false},
                {G::a(), false}},
               {{"T*(1 - 2*e1234)", V::NonZeroScalar, "", {}},
                {"proj({4}, psi(T))", V::NonZero, "", {}},
                {"psi(T)", V::Equals, "5 + 4*e1234", {euclid4}}},
               "Q is strictly smaller than Q' for n = 4"});

  r.push_back({"scalar-plus-pseudoscalar-8",
               "1 + 2*e12345678",
               "n = 8",
               dimension_is(8),
               {{G::q_prime(), true}, {G::p(), true}, {G::q(), false}, {G::a(), false}},
               {{"T*(1 - 2*e12345678)", V::NonZeroScalar, "", {}},
                {"proj({8}, psi(T))", V::NonZero, "", {}}},
               "Q is strictly smaller than Q' for n = 8"});

  r.push_back({"split-unit",
               "1 + e1234",
               "n = 4, real, q odd",
               [](const Signature& s) { return s.n() == 4 && !s.is_complex() && s.q() % 2 == 1; },
               {{G::gamma_bar(2), true},
                {G::gamma_bar(0), true},
                {G::q_prime(), true},
                {G::gamma_bar(1), false},
                {G::gamma_bar(3), false},
                {G::q(), false}},
               {{"inv(T)", V::Equals, "1/2 - 1/2*e1234", {}},
                {"T*e1*inv(T)", V::Equals, "-e234", {lorentz4}}},
               "Gamma^bar2 is not Gamma^bar1 for n = 4"});

  r.push_back({"bivector-plus-quadvector",
               "e12 + e3456",
               "n = 6, complex or eta1 eta2 = eta3 eta4 eta5 eta6",
               [](const Signature& s) {
                 return s.n() == 6 &&
                        (s.is_complex() || metric_product(s, {1, 2}) == metric_product(s, {3, 4, 5, 6}));
               },
               {{G::q(), true}, {G::gamma(), false}},
               {{"psi(T)", V::NonZeroScalar, "", {}},
                {"psi(T)", V::Equals, "2", {euclid6}},
                {"T*e1*inv(T)", V::Equals, "-e23456", {euclid6}}},
               "Gamma is strictly smaller than Q for n = 6"});

  r.push_back({"bivector-plus-quadvector-scaled",
               "e12 + 2*e3456",
               "n = 6",
               dimension_is(6),
               {{G::q(), true}, {G::gamma(), false}},
               {{"psi(T)", V::NonZeroScalar, "", {}}},
               "Gamma is strictly smaller than Q for n = 6"});

  r.push_back({"scalar-plus-pseudoscalar-6",
               "1 + 2*e123456",
               "n = 6",
               dimension_is(6),
               {{G::gamma_grade(3), true}, {G::q(), true}, {G::gamma(), false}},
               {{"T*(1 - 2*e123456)", V::NonZeroScalar, "", {}},
                {"T*e1*inv(T)", V::Equals, "-3/5*e1 - 4/5*e23456", {euclid6}}},
               "Gamma^3 is not Gamma^1 for n = 6"});
  return r;
}

}  // namespace

const std::vector<CounterexampleEntry>& default_registry() {
  static const std::vector<CounterexampleEntry> registry = build();
  return registry;
}

std::vector<Signature> signatures_of_dimension(int n) {
  std::vector<Signature> out;
  for (int p = n; p >= 0; --p) out.push_back(Signature::real(p, n - p));
  out.push_back(Signature::complex(n));
  return out;
}

}  // namespace cliffaut
