#include <doctest.h>

#include "arbora/error.hpp"
#include "arbora/gd_family.hpp"
#include "arbora/word_problem.hpp"

using namespace arbora;

TEST_CASE("build_table examples") {
  const auto t3 = build_table(3);
  const auto expected = parse_table("a = (a, b, e) (1 2)\nb = (e, b, c) (2 3)\nc = (a, e, c) (3 1)\n");
  for (int i = 0; i < 3; ++i) CHECK(t3.generator(i) == expected.generator(i));

  const Alphabet A5(5);
  const auto t5 = build_table(5);
  const auto& a5 = t5.generator(4);
  CHECK(a5.sections == std::vector<Word>{gen(A5, 1), Word(A5), Word(A5), Word(A5), gen(A5, 5)});
  CHECK(format_cycles(a5.perm) == "(1 5)");

  const Alphabet A4(4);
  const auto t4 = build_table(4);
  const auto& a2 = t4.generator(1);
  CHECK(a2.sections == std::vector<Word>{Word(A4), gen(A4, 2), gen(A4, 3), Word(A4)});
  CHECK(format_cycles(a2.perm) == "(2 3)");

  CHECK_THROWS_AS(build_table(2), Error);
  CHECK(build_table(3).origin() == TableOrigin::GdFamily);
}

TEST_CASE("generators are transpositions with two single-letter sections") {
  for (int d = 3; d <= 9; ++d) {
    const auto t = build_table(d);
    for (int i = 0; i < d; ++i) {
      const auto& g = t.generator(i);
      CHECK(g.perm.order() == 2);
      int nonempty = 0;
      for (const auto& s : g.sections) {
        CHECK(s.size() <= 1);
        CHECK(s.is_positive());
        nonempty += s.empty() ? 0 : 1;
      }
      CHECK(nonempty == 2);
    }
  }
}

TEST_CASE("catalog examples") {
  const Alphabet A3(3);
  CHECK(catalog(3).at("g") == parse_word("a b c", A3));
  CHECK(catalog(3).at("h") == parse_word("b a c", A3));
  CHECK(catalog(3).at("h_3") == parse_word("a b c b", A3));
  CHECK(catalog(3).at("xi_1") ==
        commutator(power(gen(A3, 2), 2), gen(A3, 3)) *
            invert(commutator(gen(A3, 1), gen(A3, 2)) * commutator(gen(A3, 2), gen(A3, 3))));
  CHECK(catalog(4).at("w4") == parse_word("a2 a1 a3' a2 a1' a4 a2' a1'", Alphabet(4)));
  CHECK(catalog(3).at("gbr_2") == catalog(3).at("xi_2"));
  CHECK(catalog(5).at("h") == parse_word("a2 a1 a5 a4 a3", Alphabet(5)));
}

TEST_CASE("catalog availability depends on d") {
  auto code = [](int d, const char* name) {
    try {
      catalog(d).at(name);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BudgetExceeded;
  };
  CHECK(code(4, "xi_1") == ErrorCode::NameUnavailable);
  CHECK(code(3, "w4") == ErrorCode::NameUnavailable);
  CHECK(code(5, "rist_lift_ca") == ErrorCode::NameUnavailable);
  CHECK(code(4, "s_1") == ErrorCode::NameUnavailable);
  CHECK_THROWS_AS(catalog(2), Error);
}

TEST_CASE("catalog entries are unique, nonempty and reduced") {
  for (int d : {3, 4, 5, 7}) {
    const auto cat = catalog(d);
    for (const auto& [name, w] : cat.entries()) {
      CHECK_FALSE(w.empty());
      const std::vector<Letter> raw(w.letters().begin(), w.letters().end());
      CHECK(free_reduce(w.alphabet(), raw) == w);
      CHECK(cat.contains(name));
    }
  }
  ElementCatalog cat(Alphabet(3));
  cat.add("x", gen(Alphabet(3), 1));
  CHECK_THROWS_AS(cat.add("x", gen(Alphabet(3), 2)), std::invalid_argument);
  CHECK_THROWS_AS(cat.add("y", Word(Alphabet(3))), std::invalid_argument);
}

TEST_CASE("catalog sanity for odd d") {
  for (int d : {3, 5, 7}) {
    const auto t = build_table(d);
    const auto cat = catalog(d);
    CHECK(section_at(t, cat.at("g"), 0) == cat.at("g"));
    CHECK(first_level_permutation(t, cat.at("h_" + std::to_string(d))).is_identity());
    for (int i = 1; i < d; ++i) {
      std::vector<int> images(static_cast<std::size_t>(d));
      for (int x = 0; x < d; ++x) images[static_cast<std::size_t>(x)] = x;
      // (i+1 i ... 2 1): x -> x-1 for 2 <= x <= i+1, 1 -> i+1.
      for (int x = 1; x <= i; ++x) images[static_cast<std::size_t>(x)] = x - 1;
      images[0] = i;
      CHECK(first_level_permutation(t, cat.at("g_" + std::to_string(i))) == Permutation::from_images(images));
    }
  }
}
