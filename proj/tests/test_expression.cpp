#include <doctest.h>

#include <random>

#include "cliffaut/errors.hpp"
#include "cliffaut/expression.hpp"
#include "cliffaut/verify.hpp"
#include "support.hpp"

using namespace cliffaut;

TEST_CASE("evaluation examples") {
  const Signature euclid4 = Signature::real(4, 0);
  CHECK(to_string(evaluate("rev(e12+2*e34)*(e12+2*e34)", euclid4)) == "5 - 4*e1234");
  CHECK(to_string(evaluate("inv(1 + e1234)", Signature::real(1, 3))) == "1/2 - 1/2*e1234");
  CHECK(to_string(evaluate("proj({0,n}, psi(1+2*e{1,2,3,4}))", euclid4)) == "5 + 4*e1234");
  CHECK(to_string(evaluate("e21", euclid4)) == "-e12");
  CHECK(to_string(evaluate("e{3,1}", euclid4)) == "-e13");
  CHECK(to_string(evaluate("e11", Signature::real(0, 2))) == "-1");
  CHECK(to_string(evaluate("(1 + e1)^2", euclid4)) == "2 + 2*e1");
  CHECK(to_string(evaluate("(2*e1)^-1", euclid4)) == "1/2*e1");
  CHECK(to_string(evaluate("-3/4 + gi(e1 + e12)", euclid4)) == "-3/4 - e1 + e12");
  CHECK(to_string(evaluate("cj(e1 + e12 + e123)", euclid4)) == "-e1 - e12 + e123");
  CHECK(to_string(evaluate("proj(even, 1 + e1 + e12)", euclid4)) == "1 + e12");
  CHECK(to_string(evaluate("proj(bar2, 1 + e12 + e123)", euclid4)) == "e12");
  CHECK(to_string(evaluate("chi(1 + 2*e123)", euclid4)) == "-3 + 4*e123");
  CHECK(to_string(evaluate("i*e1 - (2 - i)*e2", Signature::complex(2))) == "i*e1 + (-2+i)*e2");
  CHECK(to_string(evaluate("e{1,10}*e{10}", Signature::real(10, 0))) == "e{1}");
  CHECK(to_string(evaluate("012 + 09/010", euclid4)) == "129/10");
}

TEST_CASE("variables") {
  const Signature sig = Signature::real(3, 0);
  const Environment env{{"T", evaluate("1 + e12", sig)}};
  CHECK(to_string(evaluate("T*e1*inv(T)", sig, env)) == "-e2");
  CHECK_THROWS_AS(evaluate("U + 1", sig, env), ParseError);
}

TEST_CASE("parse errors carry offsets") {
  const Signature sig = Signature::real(3, 0);
  for (const char* bad : {"", "1 +", "e", "(e1", "e1 e2", "foo(e1)", "1/0", "i", "e1^", "proj({9}, e1)", "e{1,}", "2**e1"}) {
    INFO(bad);
    CHECK_THROWS_AS(evaluate(bad, sig), ParseError);
  }
  try {
    evaluate("1 + * e1", sig);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(evaluate("e14", sig), IndexOutOfRange);
  CHECK_THROWS_AS(evaluate("e{0}", sig), IndexOutOfRange);
  CHECK_THROWS_AS(evaluate("e12", Signature::real(10, 0)), ParseError);
  CHECK_THROWS_AS(evaluate("inv(1 + e1)", Signature::real(1, 0)), SingularError);
}

TEST_CASE("printing then parsing is the identity") {
  for (const auto& sig : support::signatures(6)) {
    Corpus corpus = build_corpus(sig, 51, 20);
    for (const auto& e : corpus.elements) {
      const std::string text = to_string(e.value);
      CHECK(evaluate(text, sig) == e.value);
      CHECK(to_string(evaluate(text, sig)) == text);
    }
  }
  const Signature big = Signature::real(10, 0);
  std::mt19937_64 rng(52);
  for (int i = 0; i < 10; ++i) {
    const Multivector x = support::random_mv(big, rng, 0.01);
    CHECK(evaluate(to_string(x), big) == x);
  }
}

// Mutated inputs either parse or fail with one of the two parse errors.
TEST_CASE("mutation fuzz") {
  const std::string alphabet = "e0123456789{},+-*/^()i pnrevgicjpsoh";
  std::mt19937_64 rng(53);
  const Signature sig = Signature::complex(4);
  const std::vector<std::string> seeds{"rev(e12+2*e34)*(e12+2*e34)", "proj({0,4}, psi(1+2*e{1,2,3,4}))",
                                       "inv(1 + e1234)^-2", "(1/2 - i*e13)*cj(e2)"};
  int accepted = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string text = seeds[i % seeds.size()];
    const int edits = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < edits; ++k) {
      const std::size_t pos = rng() % (text.size() + 1);
      const char c = alphabet[rng() % alphabet.size()];
      switch (rng() % 3) {
        case 0:
          text.insert(text.begin() + static_cast<long>(pos), c);
          break;
        case 1:
          if (pos < text.size()) text.erase(pos, 1);
          break;
        default:
          if (pos < text.size()) text[pos] = c;
      }
    }
    try {
      evaluate(text, sig);
      ++accepted;
    } catch (const ParseError&) {
    } catch (const IndexOutOfRange&) {
    } catch (const SingularError&) {
    }
  }
  CHECK(accepted > 0);
}
