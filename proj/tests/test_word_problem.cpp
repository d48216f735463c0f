#include <doctest.h>

#include "arbora/error.hpp"
#include "arbora/gd_family.hpp"
#include "arbora/verifier.hpp"
#include "arbora/word_problem.hpp"

using namespace arbora;

namespace {

Word w3(const char* text) { return parse_word(text, Alphabet(3)); }

// Only one direction is sound: an identity word must act trivially on a level.
bool acts_trivially(const RecursionTable& t, const Word& w, std::size_t level) {
  return level_permutation(t, w, level).is_identity();
}

bool sound(const RecursionTable& t, const Word& w, int depth) {
  if (depth == 0) return true;
  const auto wr = wreath(t, w);
  if (!wr.perm.is_identity()) return false;
  for (const auto& s : wr.sections) {
    if (!is_identity(t, s).is_identity || !sound(t, s, depth - 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_identity examples") {
  const auto t3 = build_table(3);
  CHECK(is_identity(t3, Word(Alphabet(3))).is_identity);
  const auto t4 = build_table(4);
  const auto w4 = is_identity(t4, catalog(4).at("w4"));
  CHECK(w4.is_identity);
  CHECK(w4.nodes_explored >= 1);
  CHECK_FALSE(is_identity(t3, commutator(w3("a"), w3("b"))).is_identity);
}

TEST_CASE("strategies and their errors") {
  const auto t4 = build_table(4);
  try {
    is_identity(t4, catalog(4).at("w4"), {Strategy::OddShortcut});
    FAIL("expected StrategyMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StrategyMismatch);
  }
  CHECK(parse_strategy("odd-shortcut") == Strategy::OddShortcut);
  CHECK(parse_strategy("odd_shortcut") == Strategy::OddShortcut);
  CHECK(parse_strategy("generic") == Strategy::Generic);
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);

  const auto t3 = build_table(3);
  const auto shortcut = is_identity(t3, w3("a a"), {Strategy::OddShortcut});
  CHECK_FALSE(shortcut.is_identity);
  CHECK(shortcut.shortcut_hits == 1);
}

TEST_CASE("node budget is enforced") {
  const auto t3 = build_table(3);
  SolverOptions tight;
  tight.max_nodes = 2;
  const Word w = w3("a a b' c' c' a' a' b c c");
  CHECK(is_identity(t3, w).nodes_explored == 3);
  try {
    is_identity(t3, w, tight);
    FAIL("expected NodeBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NodeBudgetExceeded);
  }
}

TEST_CASE("are_equal examples") {
  const auto t3 = build_table(3);
  const Word w = w3("a b' c a");
  CHECK(are_equal(t3, w, w));
  CHECK_FALSE(are_equal(t3, w3("a b"), w3("b a")));
  CHECK(are_equal(t3, power(catalog(3).at("xi_1"), 3), Word(Alphabet(3))));
}

TEST_CASE("in_level_stabilizer examples") {
  const auto t3 = build_table(3);
  CHECK(in_level_stabilizer(t3, w3("a b c b"), 1));
  CHECK_FALSE(in_level_stabilizer(t3, w3("a"), 1));
  CHECK(in_level_stabilizer(t3, w3(""), 5));
  CHECK(in_level_stabilizer(t3, w3("a a"), 1));
  CHECK_FALSE(in_level_stabilizer(t3, w3("a a"), 2));
  CHECK_THROWS_AS(in_level_stabilizer(t3, w3("a"), 20), Error);
}

TEST_CASE("order_probe examples") {
  const auto t3 = build_table(3);
  CHECK(order_probe(t3, catalog(3).at("xi_1"), 10) == OrderResult::finite(3));
  CHECK(order_probe(t3, w3("a"), 128) == OrderResult::unknown_beyond(128));
  CHECK(order_probe(t3, w3(""), 1) == OrderResult::finite(1));
  CHECK(order_probe(build_table(5), catalog(5).at("xi_1"), 10) == OrderResult::finite(2));
}

TEST_CASE("identity words act trivially on level 5") {
  for (int d : {3, 4, 5}) {
    const auto t = build_table(d);
    auto words = all_reduced_words(Alphabet(d), d == 3 ? 6 : 4);
    const Word known = d == 4 ? catalog(4).at("w4") : power(catalog(d).at("xi_1"), d == 3 ? 3 : 2);
    WordSampler sampler(static_cast<std::uint64_t>(d));
    for (int k = 0; k < 20; ++k) words.push_back(conjugate(known, sampler.word(Alphabet(d), 6)));
    std::size_t found = 0;
    for (const Word& w : words) {
      if (!is_identity(t, w).is_identity) continue;
      ++found;
      CHECK(acts_trivially(t, w, d == 3 ? 5 : 3));
    }
    CHECK(found > 0);
  }
  CHECK(acts_trivially(build_table(4), catalog(4).at("w4"), 4));
}

TEST_CASE("non-identity on a level implies non-identity") {
  const auto t = build_table(3);
  WordSampler sampler(21);
  for (int k = 0; k < 500; ++k) {
    const Word w = sampler.word(Alphabet(3), 12);
    if (!acts_trivially(t, w, 4)) CHECK_FALSE(is_identity(t, w).is_identity);
  }
}

TEST_CASE("identity decisions are invariant under cyclic shifts and sound against wreath") {
  for (int d : {3, 4, 5}) {
    const auto t = build_table(d);
    WordSampler sampler(static_cast<std::uint64_t>(d) * 13);
    std::vector<Word> words = sampler.words(Alphabet(d), 300, 12);
    if (d == 4) words.push_back(catalog(4).at("w4"));
    if (d != 4) words.push_back(catalog(d).at("xi_1"));
    for (const Word& w : words) {
      const bool id = is_identity(t, w).is_identity;
      for (std::size_t s = 1; s < w.size(); ++s) CHECK(is_identity(t, cyclic_shift(w, s)).is_identity == id);
      if (id) CHECK(sound(t, w, 3));
    }
  }
}

TEST_CASE("odd d: relators have zero exponent vector and strategies agree") {
  for (int d : {3, 5}) {
    const auto t = build_table(d);
    const auto words = all_reduced_words(Alphabet(d), d == 3 ? 6 : 4);
    for (const Word& w : words) {
      const bool generic = is_identity(t, w, {Strategy::Generic}).is_identity;
      CHECK(generic == is_identity(t, w, {Strategy::OddShortcut}).is_identity);
      if (generic) CHECK(exponent_vector(w).is_zero());
    }
  }
}

TEST_CASE("positive words are never the identity") {
  const auto t = build_table(3);
  for (const Word& w : all_positive_words(Alphabet(3), 8)) {
    CHECK_FALSE(is_identity(t, w).is_identity);
    CHECK_FALSE(is_identity(t, invert(w)).is_identity);
  }
}

TEST_CASE("generic search on a user table") {
  // A copy of G_3 loaded from text is searched without the sign-pure case.
  const auto user = parse_table(format_table(build_table(3)));
  CHECK(user.origin() == TableOrigin::UserSupplied);
  CHECK(is_identity(user, power(catalog(3).at("xi_1"), 3)).is_identity);
  CHECK_FALSE(is_identity(user, parse_word("a b' c", Alphabet(3))).is_identity);
  try {
    is_identity(user, parse_word("a", Alphabet(3)), {Strategy::OddShortcut});
    FAIL("expected StrategyMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StrategyMismatch);
  }
  // a = (a, a, a) is the identity only coinductively; b = (e, e, b)(1 2 3)
  // moves level one and b^3 = (b, b, b) does not collapse.
  const auto loops = parse_table("a = (a, a, a) ()\nb = (e, e, b) (1 2 3)\nc = (e, e, e) ()\n");
  CHECK(is_identity(loops, parse_word("a", Alphabet(3))).is_identity);
  CHECK_FALSE(is_identity(loops, parse_word("b", Alphabet(3))).is_identity);
  CHECK_FALSE(is_identity(loops, parse_word("b b b", Alphabet(3))).is_identity);
}
