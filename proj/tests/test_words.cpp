#include <doctest.h>

#include <random>

#include "arbora/error.hpp"
#include "arbora/verifier.hpp"
#include "arbora/words.hpp"

using namespace arbora;

namespace {

Word w3(const char* text) { return parse_word(text, Alphabet(3)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no arbora::Error thrown");
  return ErrorCode::BudgetExceeded;
}

}  // namespace

TEST_CASE("alphabet needs at least three generators") {
  CHECK(code_of([] { Alphabet(2); }) == ErrorCode::ArityTooSmall);
  CHECK(Alphabet(3).has_letter_aliases());
  CHECK_FALSE(Alphabet(4).has_letter_aliases());
}

TEST_CASE("parse_word examples") {
  CHECK(w3("").empty());
  CHECK(w3("e").empty());

  const Word aba = w3("a b a'");
  REQUIRE(aba.size() == 3);
  CHECK(aba[0] == Letter{0, false});
  CHECK(aba[1] == Letter{1, false});
  CHECK(aba[2] == Letter{0, true});

  const Alphabet A4(4);
  const Word w4 = parse_word("a2 a1 a3' a2 a1' a4 a2' a1'", A4);
  CHECK(w4.size() == 8);
  CHECK(format_word(w4) == "a2 a1 a3' a2 a1' a4 a2' a1'");
}

TEST_CASE("parse_word accepts powers, contiguous tokens and numbered names") {
  CHECK(format_word(w3("a^3")) == "a a a");
  CHECK(format_word(w3("a'^2 b")) == "a' a' b");
  CHECK(w3("abc") == w3("a b c"));
  CHECK(w3("a1 a2 a3") == w3("a b c"));
  CHECK(w3("a^0").empty());
  CHECK(format_word(parse_word("a5'^2", Alphabet(5))) == "a5' a5'");
}

TEST_CASE("parse_word errors") {
  CHECK(code_of([] { w3("d"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { w3("a4"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { parse_word("a b", Alphabet(4)); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { w3("a^"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { w3("a, b"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { w3("''"); }) == ErrorCode::MalformedToken);
}

TEST_CASE("free_reduce examples") {
  const Alphabet A(3);
  const Letter a{0, false}, ai{0, true}, b{1, false}, bi{1, true};
  CHECK(free_reduce(A, std::vector<Letter>{a, ai, b}) == w3("b"));
  CHECK(free_reduce(A, std::vector<Letter>{bi, a, ai, b}).empty());
  const Word w4 = parse_word("a2 a1 a3' a2 a1' a4 a2' a1'", Alphabet(4));
  const std::vector<Letter> raw(w4.letters().begin(), w4.letters().end());
  CHECK(free_reduce(Alphabet(4), raw) == w4);
}

TEST_CASE("invert examples") {
  CHECK(invert(w3("")).empty());
  CHECK(invert(w3("a b")) == w3("b' a'"));
  CHECK(invert(w3("a a")) == w3("a' a'"));
}

TEST_CASE("concat examples") {
  CHECK(concat(w3("a b"), w3("b'")) == w3("a"));
  CHECK(concat(w3(""), w3("a c'")) == w3("a c'"));
  CHECK(concat(w3("a"), w3("b")) == w3("a b"));
  CHECK(code_of([] { concat(w3("a"), parse_word("a1", Alphabet(4))); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("exponent_vector examples") {
  CHECK(exponent_vector(w3("a b")) == ExponentVector{{1, 1, 0}});
  CHECK(exponent_vector(parse_word("a2 a1 a3' a2 a1' a4 a2' a1'", Alphabet(4))) == ExponentVector{{-1, 1, -1, 1}});
  CHECK(exponent_vector(w3("a a'")).is_zero());
}

TEST_CASE("cyclic_normalize examples") {
  const auto r = cyclic_normalize(w3("a b'"));
  REQUIRE(std::holds_alternative<Word>(r));
  CHECK(std::get<Word>(r) == w3("b' a"));
  CHECK(std::holds_alternative<SignPure>(cyclic_normalize(w3("a b c"))));
  CHECK(code_of([] { cyclic_normalize(w3("b' a a' b")); }) == ErrorCode::EmptyWord);
}

TEST_CASE("cyclic_normalize picks the leftmost rotation and keeps the conjugacy class") {
  const auto r = cyclic_normalize(w3("a' b c"));
  REQUIRE(std::holds_alternative<Word>(r));
  CHECK(std::get<Word>(r) == w3("c a' b"));
  // Matching ends are stripped first: c (a' b) c' is conjugate to a' b.
  const auto s = cyclic_normalize(w3("c a' b c'"));
  REQUIRE(std::holds_alternative<Word>(s));
  CHECK(std::get<Word>(s) == w3("a' b"));
  CHECK(std::holds_alternative<SignPure>(cyclic_normalize(w3("c a b c'"))));
}

TEST_CASE("power, conjugate and commutator expand as expected") {
  const Word a = w3("a"), b = w3("b");
  CHECK(power(a, 3) == w3("a a a"));
  CHECK(power(a * b, -2) == w3("b' a' b' a'"));
  CHECK(power(a, 0).empty());
  CHECK(conjugate(a, b) == w3("b' a b"));
  CHECK(commutator(a, b) == w3("a' b' a b"));
}

TEST_CASE("printing round trips") {
  WordSampler sampler(7);
  for (int d : {3, 4, 9}) {
    const Alphabet A(d);
    for (int k = 0; k < 200; ++k) {
      const Word w = sampler.word(A, 12);
      CHECK(parse_word(format_word(w), A) == w);
    }
  }
  CHECK(format_word(Word(Alphabet(3))) == "e");
}

TEST_CASE("word properties on random samples") {
  WordSampler sampler(11);
  const Alphabet A(5);
  for (int k = 0; k < 300; ++k) {
    const Word u = sampler.word(A, 10), v = sampler.word(A, 10), w = sampler.word(A, 10);
    CHECK((u * v) * w == u * (v * w));
    CHECK(invert(invert(u)) == u);
    CHECK((u * invert(u)).empty());
    CHECK(exponent_vector(u * v) == exponent_vector(u) + exponent_vector(v));
    CHECK(exponent_vector(invert(u)) == -exponent_vector(u));
    const std::vector<Letter> raw(u.letters().begin(), u.letters().end());
    CHECK(free_reduce(A, raw) == u);
    if (!u.empty()) {
      const auto r = cyclic_normalize(u);
      if (const auto* n = std::get_if<Word>(&r)) {
        CHECK(exponent_vector(*n) == exponent_vector(u));
        REQUIRE(n->size() >= 2);
        CHECK((*n)[n->size() - 2].inverse);
        CHECK_FALSE((*n)[n->size() - 1].inverse);
      }
    }
  }
}

TEST_CASE("cyclic_shift rotates letters") {
  CHECK(cyclic_shift(w3("a b c"), 1) == w3("b c a"));
  CHECK(cyclic_shift(w3("a b c"), 3) == w3("a b c"));
}

TEST_CASE("letter names") {
  CHECK(letter_name(Alphabet(3), Letter{2, true}) == "c'");
  CHECK(letter_name(Alphabet(5), Letter{4, false}) == "a5");
}
