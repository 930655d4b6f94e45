#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cliffaut/blade.hpp"
#include "cliffaut/errors.hpp"
#include "cliffaut/multivector.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cliffaut;

TEST_CASE("signature metric and naming") {
  const Signature s = Signature::real(2, 3);
  CHECK(s.n() == 5);
  CHECK(s.dimension() == 32);
  CHECK(s.metric(1) == 1);
  CHECK(s.metric(2) == 1);
  CHECK(s.metric(3) == -1);
  CHECK(s.metric(5) == -1);
  CHECK(s.name() == "Cl(2,3)");
  CHECK(Signature::complex(4).name() == "Cl(C^4)");
  CHECK(Signature::complex(4).metric(3) == 1);
  CHECK(Signature::real(2, 3) != Signature::complex(5));
}

TEST_CASE("generators square to the metric") {
  for (const auto& sig : support::signatures(6)) {
    for (int a = 1; a <= sig.n(); ++a) {
      const Multivector e = Multivector::generator(sig, a);
      CHECK(e * e == Multivector::scalar(sig, Exact(sig.metric(a))));
    }
  }
}

TEST_CASE("distinct generators anticommute") {
  const Signature sig = Signature::real(2, 2);
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      const Multivector x = Multivector::generator(sig, a);
      const Multivector y = Multivector::generator(sig, b);
      CHECK(anticommutator(x, y).is_zero());
    }
  }
}

TEST_CASE("blade products agree with the word-reduction oracle") {
  for (const auto& sig : support::signatures(5)) {
    for (Blade a = 0; a < sig.dimension(); ++a) {
      for (Blade b = 0; b < sig.dimension(); ++b) {
        const auto got = basis_blade_product(a, b, sig);
        const auto [sign, blade] = oracle::blade_product(a, b, sig);
        REQUIRE(got.blade == blade);
        REQUIRE(got.sign == sign);
      }
    }
  }
}

TEST_CASE("hand-computed blade products") {
  const Signature euclid = Signature::real(3, 0);
  const Signature anti = Signature::real(0, 3);
  // e12 e12 = e1 e2 e1 e2 = -e1 e1 e2 e2
  CHECK(basis_blade_product(0b011, 0b011, euclid).sign == -1);
  CHECK(basis_blade_product(0b011, 0b011, anti).sign == -1);
  // e123 e123 = -1 in Cl(3,0), +1 in Cl(0,3)
  CHECK(basis_blade_product(0b111, 0b111, euclid).sign == -1);
  CHECK(basis_blade_product(0b111, 0b111, anti).sign == 1);
  // e2 e1 = -e12
  const auto p = basis_blade_product(0b010, 0b001, euclid);
  CHECK(p.blade == 0b011);
  CHECK(p.sign == -1);
}

TEST_CASE("blade indices and text") {
  CHECK(blade_from_indices({3, 1}) == 0b101);
  CHECK(pseudoscalar(4) == 0b1111);
  CHECK(blade_text(0b1011, 4) == "e124");
  CHECK(blade_text(0b1000000001, 10) == "e{1,10}");
}

TEST_CASE("dense products agree with the oracle") {
  std::mt19937_64 rng(11);
  for (const auto& sig : support::signatures(4)) {
    for (int i = 0; i < 10; ++i) {
      const Multivector x = support::random_mv(sig, rng);
      const Multivector y = support::random_mv(sig, rng);
      REQUIRE(x * y == oracle::product(x, y));
    }
  }
}

TEST_CASE("product is associative") {
  std::mt19937_64 rng(12);
  const auto sigs = support::signatures(6);
  int trials = 0;
  for (int i = 0; i < 240; ++i) {
    const Signature& sig = sigs[i % sigs.size()];
    const Multivector x = support::random_mv(sig, rng, 0.3);
    const Multivector y = support::random_mv(sig, rng, 0.3);
    const Multivector z = support::random_mv(sig, rng, 0.3);
    REQUIRE((x * y) * z == x * (y * z));
    ++trials;
  }
  CHECK(trials >= 200);
}

TEST_CASE("product distributes over addition") {
  std::mt19937_64 rng(13);
  for (const auto& sig : support::signatures(4)) {
    const Multivector x = support::random_mv(sig, rng);
    const Multivector y = support::random_mv(sig, rng);
    const Multivector z = support::random_mv(sig, rng);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
  }
}

TEST_CASE("mismatched signatures are rejected") {
  const Multivector x = Multivector::generator(Signature::real(2, 0), 1);
  const Multivector y = Multivector::generator(Signature::real(1, 1), 1);
  CHECK_THROWS_AS(x * y, SignatureMismatch);
  CHECK_THROWS_AS(x + y, SignatureMismatch);
}

TEST_CASE("involutions match the oracle and their defining identities") {
  std::mt19937_64 rng(14);
  for (const auto& sig : support::signatures(5)) {
    for (int i = 0; i < 5; ++i) {
      const Multivector x = support::random_mv(sig, rng);
      const Multivector y = support::random_mv(sig, rng);
      CHECK(reverse(x) == oracle::reverse(x));
      CHECK(grade_involution(x) == oracle::hat(x));
      CHECK(clifford_conjugate(x) == grade_involution(reverse(x)));
      CHECK(reverse(reverse(x)) == x);
      CHECK(grade_involution(grade_involution(x)) == x);
      CHECK(reverse(x * y) == reverse(y) * reverse(x));
      CHECK(grade_involution(x * y) == grade_involution(x) * grade_involution(y));
      CHECK(clifford_conjugate(x * y) == clifford_conjugate(y) * clifford_conjugate(x));
    }
  }
}

TEST_CASE("quaternion-type subspaces agree with the involution characterization") {
  for (const auto& sig : support::signatures(8)) {
    const int n = sig.n();
    for (Blade b = 0; b < sig.dimension(); ++b) {
      const int m = oracle::bar_type(b, sig);
      for (int k = 0; k < 4; ++k) REQUIRE(SubspaceSpec::bar(n, k).contains_blade(b) == (k == m));
    }
  }
}

TEST_CASE("subspace specs") {
  CHECK(SubspaceSpec::bar(6, 2).grade_list() == std::vector<int>{2, 6});
  CHECK(SubspaceSpec::parity(5, 1).grade_list() == std::vector<int>{1, 3, 5});
  CHECK(SubspaceSpec::center(4).grade_list() == std::vector<int>{0});
  CHECK(SubspaceSpec::center(5).grade_list() == std::vector<int>{0, 5});
  CHECK(SubspaceSpec::bar(2, 3).empty());
  CHECK(SubspaceSpec::grade(4, 2).dimension() == 6);
  CHECK((SubspaceSpec::bar(4, 0) | SubspaceSpec::bar(4, 1)).dimension() == 1 + 4 + 1);
  CHECK((SubspaceSpec::parity(4, 0) & SubspaceSpec::bar(4, 2)) == SubspaceSpec::bar(4, 2));
  CHECK(SubspaceSpec::grades(4, {0, 2}).to_string() == "C^{0,2}");
  CHECK(SubspaceSpec::all(3).blades().size() == 8);
  for (int n = 1; n <= 10; ++n) {
    long long total = 0;
    for (int m = 0; m < 4; ++m) total += SubspaceSpec::bar(n, m).dimension();
    CHECK(total == (1LL << n));
  }
}

TEST_CASE("grade projections form a partition of unity") {
  std::mt19937_64 rng(15);
  for (const auto& sig : support::signatures(6)) {
    const Multivector x = support::random_mv(sig, rng);
    Multivector sum(sig);
    Multivector bar_sum(sig);
    for (int k = 0; k <= sig.n(); ++k) {
      const Multivector part = grade_project(x, SubspaceSpec::grade(sig.n(), k));
      CHECK(grade_project(part, SubspaceSpec::grade(sig.n(), k)) == part);
      sum = sum + part;
    }
    for (int m = 0; m < 4; ++m) bar_sum = bar_sum + grade_project(x, SubspaceSpec::bar(sig.n(), m));
    CHECK(sum == x);
    CHECK(bar_sum == x);
    CHECK(grade_project(x, SubspaceSpec::parity(sig.n(), 0)) + grade_project(x, SubspaceSpec::parity(sig.n(), 1)) ==
          x);
  }
}

// Z2 x Z2 grading: bracket of C^bar k and C^bar l lands in one C^bar m.
TEST_CASE("commutator and anticommutator grading tables") {
  const std::map<std::pair<int, int>, int> commutator_table{
      {{0, 0}, 2}, {{1, 1}, 2}, {{2, 2}, 2}, {{3, 3}, 2}, {{0, 2}, 0}, {{1, 2}, 1},
      {{3, 2}, 3}, {{0, 1}, 3}, {{0, 3}, 1}, {{1, 3}, 0},
  };
  const std::map<std::pair<int, int>, int> anticommutator_table{
      {{0, 0}, 0}, {{1, 1}, 0}, {{2, 2}, 0}, {{3, 3}, 0}, {{1, 0}, 1}, {{2, 0}, 2},
      {{3, 0}, 3}, {{1, 2}, 3}, {{2, 3}, 1}, {{3, 1}, 2},
  };
  auto lookup = [](const auto& table, int k, int l) {
    if (auto it = table.find({k, l}); it != table.end()) return it->second;
    return table.at({l, k});
  };
  std::mt19937_64 rng(16);
  for (const auto& sig : support::signatures(6)) {
    const int n = sig.n();
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        const Multivector x = grade_project(support::random_mv(sig, rng), SubspaceSpec::bar(n, k));
        const Multivector y = grade_project(support::random_mv(sig, rng), SubspaceSpec::bar(n, l));
        CHECK(in_subspace(commutator(x, y), SubspaceSpec::bar(n, lookup(commutator_table, k, l))));
        CHECK(in_subspace(anticommutator(x, y), SubspaceSpec::bar(n, lookup(anticommutator_table, k, l))));
      }
    }
  }
}

TEST_CASE("center blades") {
  for (const auto& sig : support::signatures(6)) {
    std::vector<Blade> expected;
    for (Blade b : SubspaceSpec::center(sig.n()).blades()) expected.push_back(b);
    CHECK(oracle::central_blades(sig) == expected);
  }
}

TEST_CASE("canonical text") {
  const Signature sig = Signature::real(4, 0);
  CHECK(to_string(Multivector(sig)) == "0");
  CHECK(to_string(Multivector::scalar(sig, Exact::fraction(-3, 4))) == "-3/4");
  const Multivector x = Multivector::scalar(sig, Exact(5)) - Exact(4) * Multivector::blade(sig, 0b1111) +
                        Multivector::blade(sig, 0b0011);
  CHECK(to_string(x) == "5 + e12 - 4*e1234");
  const Signature c = Signature::complex(2);
  const Multivector z = Multivector::blade(c, 0b01, Exact(mpq_class(1), mpq_class(2))) +
                        Multivector::blade(c, 0b10, Exact::imaginary_unit());
  CHECK(to_string(z) == "(1+2*i)*e1 + i*e2");
  CHECK(to_string(-Multivector::blade(c, 0b11, Exact::imaginary_unit())) == "-i*e12");
}

TEST_CASE("scalar arithmetic is exact") {
  const Exact third = Exact::fraction(1, 3);
  CHECK(third + third + third == Exact(1));
  const Exact i = Exact::imaginary_unit();
  CHECK(i * i == Exact(-1));
  CHECK((Exact(1) + i) / (Exact(1) - i) == i);
  CHECK_THROWS(Exact(1) / Exact(0));
}
