#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arbora {

/// Generator set {a_1, ..., a_d}. The arity is also the branching degree of
/// the tree the group acts on.
class Alphabet {
 public:
  static constexpr int kMinArity = 3;

  explicit Alphabet(int arity);

  int arity() const noexcept { return arity_; }

  /// a, b, c are accepted as names for a1, a2, a3 only when d = 3.
  bool has_letter_aliases() const noexcept { return arity_ == 3; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int arity_;
};

/// A generator or its formal inverse. `index` is zero-based; the textual
/// grammar and all printed output are one-based.
struct Letter {
  int index = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {index, !inverse}; }
  constexpr int sign() const noexcept { return inverse ? -1 : 1; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

constexpr bool cancels(Letter x, Letter y) noexcept {
  return x.index == y.index && x.inverse != y.inverse;
}

/// Per-generator exponent sums |w|_{a_i}.
struct ExponentVector {
  std::vector<std::int64_t> counts;

  std::size_t size() const noexcept { return counts.size(); }
  std::int64_t operator[](std::size_t i) const { return counts[i]; }

  bool is_zero() const noexcept;
  /// |w|_A, the sum over all generators.
  std::int64_t total() const noexcept;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend ExponentVector operator+(const ExponentVector& x, const ExponentVector& y);
  friend ExponentVector operator-(const ExponentVector& x);
};

/// A freely reduced word over the generators and their inverses. The empty
/// word is the identity. Instances are immutable and always reduced.
class Word {
 public:
  /// Longest word the library will build from text.
  static constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 32;

  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  /// Free-reduces `raw`; throws UnknownGenerator on an index outside 0..d-1.
  Word(Alphabet alphabet, std::span<const Letter> raw);

  static Word generator(Alphabet alphabet, int index, bool inverse = false);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int arity() const noexcept { return alphabet_.arity(); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// True when every letter is a generator (empty words included).
  bool is_positive() const noexcept;
  /// True when every letter is an inverse generator (empty words included).
  bool is_negative() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word free_reduce(Alphabet alphabet, std::span<const Letter> raw);
Word invert(const Word& w);
/// Reduced concatenation; throws AlphabetMismatch.
Word concat(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);
/// w^n for any integer n (negative powers invert).
Word power(const Word& w, std::int64_t n);
/// g^h = h^-1 g h.
Word conjugate(const Word& g, const Word& h);
/// [g, h] = g^-1 h^-1 g h.
Word commutator(const Word& g, const Word& h);

ExponentVector exponent_vector(const Word& w);

struct SignPure {
  friend constexpr bool operator==(SignPure, SignPure) noexcept { return true; }
};

/// Conjugates `w` by a cyclic shift so that it ends in p^-1 q for positive
/// generators p != q. The word is first cyclically reduced (also a
/// conjugation); if what remains uses a single sign, SignPure is returned.
/// Among the admissible shifts the one whose trailing pair starts leftmost
/// in the cyclically reduced word is chosen. Throws EmptyWord.
std::variant<Word, SignPure> cyclic_normalize(const Word& w);

/// Rotation of a word's letters by `offset` positions, re-reduced.
Word cyclic_shift(const Word& w, std::size_t offset);

std::string letter_name(Alphabet alphabet, Letter letter);

/// Parses the textual word grammar: whitespace-optional tokens
/// `a1`..`a9` (or `a`,`b`,`c` when d = 3), each with an optional `'` for the
/// inverse and an optional `^n` repetition; `e` denotes the identity.
Word parse_word(std::string_view text, Alphabet alphabet);

/// Canonical text, single-space separated; the identity prints as `e`.
std::string format_word(const Word& w);

}  // namespace arbora
