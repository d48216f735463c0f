#include "arbora/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "arbora/error.hpp"

namespace arbora {

Alphabet::Alphabet(int arity) : arity_(arity) {
  if (arity < kMinArity) {
    throw Error(ErrorCode::ArityTooSmall,
                "arity " + std::to_string(arity) + " is below " + std::to_string(kMinArity));
  }
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(counts.begin(), counts.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t ExponentVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

ExponentVector operator+(const ExponentVector& x, const ExponentVector& y) {
  ExponentVector out{x.counts};
  for (std::size_t i = 0; i < out.counts.size() && i < y.counts.size(); ++i) {
    out.counts[i] += y.counts[i];
  }
  return out;
}

ExponentVector operator-(const ExponentVector& x) {
  ExponentVector out{x.counts};
  for (auto& c : out.counts) c = -c;
  return out;
}

Word::Word(Alphabet alphabet, std::span<const Letter> raw) : alphabet_(alphabet) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l.index < 0 || l.index >= alphabet.arity()) {
      throw Error(ErrorCode::UnknownGenerator,
                  "generator index " + std::to_string(l.index + 1) + " outside 1.." +
                      std::to_string(alphabet.arity()));
    }
    if (!letters_.empty() && cancels(letters_.back(), l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(Alphabet alphabet, int index, bool inverse) {
  const Letter l{index, inverse};
  return Word(alphabet, std::span<const Letter>(&l, 1));
}

bool Word::is_positive() const noexcept {
  return std::none_of(letters_.begin(), letters_.end(), [](Letter l) { return l.inverse; });
}

bool Word::is_negative() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.inverse; });
}

Word free_reduce(Alphabet alphabet, std::span<const Letter> raw) { return Word(alphabet, raw); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverted());
  }
  return Word(w.alphabet(), out);
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch, "cannot multiply words over arities " +
                                                 std::to_string(u.arity()) + " and " +
                                                 std::to_string(v.arity()));
  }
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), raw);
}

Word operator*(const Word& u, const Word& v) { return concat(u, v); }

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? invert(w) : w;
  Word out(w.alphabet());
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

Word conjugate(const Word& g, const Word& h) { return invert(h) * g * h; }

Word commutator(const Word& g, const Word& h) { return invert(g) * invert(h) * g * h; }

ExponentVector exponent_vector(const Word& w) {
  ExponentVector out{std::vector<std::int64_t>(static_cast<std::size_t>(w.arity()), 0)};
  for (Letter l : w.letters()) out.counts[static_cast<std::size_t>(l.index)] += l.sign();
  return out;
}

Word cyclic_shift(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  std::vector<Letter> raw(w.letters().begin(), w.letters().end());
  std::rotate(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(offset % raw.size()), raw.end());
  return Word(w.alphabet(), raw);
}

std::variant<Word, SignPure> cyclic_normalize(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "cannot cyclically normalize the identity");

  // Strip x ... x^-1 from both ends; a nonempty reduced word never vanishes.
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && cancels(w[lo], w[hi - 1])) {
    ++lo;
    --hi;
  }
  const auto core = w.letters().subspan(lo, hi - lo);
  const std::size_t n = core.size();

  for (std::size_t i = 0; i < n; ++i) {
    const Letter first = core[i];
    const Letter second = core[(i + 1) % n];
    if (first.inverse && !second.inverse) {
      std::vector<Letter> rotated;
      rotated.reserve(n);
      for (std::size_t k = 0; k < n; ++k) rotated.push_back(core[(i + 2 + k) % n]);
      return Word(w.alphabet(), rotated);
    }
  }
  return SignPure{};
}

std::string letter_name(Alphabet alphabet, Letter letter) {
  std::string name;
  if (alphabet.has_letter_aliases()) {
    name.push_back(static_cast<char>('a' + letter.index));
  } else {
    name = "a" + std::to_string(letter.index + 1);
  }
  if (letter.inverse) name.push_back('\'');
  return name;
}

namespace {

[[noreturn]] void malformed(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(ErrorCode::MalformedToken,
              why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

}  // namespace

Word parse_word(std::string_view text, Alphabet alphabet) {
  const int d = alphabet.arity();
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  for (skip_space(); pos < text.size(); skip_space()) {
    const std::size_t start = pos;
    const char c = text[pos++];
    bool identity_token = false;
    int index = -1;

    if (c == 'e') {
      identity_token = true;
    } else if (c == 'a' && pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const int n = text[pos++] - '0';
      if (n < 1 || n > d) {
        throw Error(ErrorCode::UnknownGenerator, "a" + std::to_string(n) + " is not a generator for d=" +
                                                     std::to_string(d));
      }
      index = n - 1;
    } else if (c >= 'a' && c <= 'z') {
      if (!alphabet.has_letter_aliases() || c > 'c') {
        throw Error(ErrorCode::UnknownGenerator,
                    std::string("'") + c + "' is not a generator for d=" + std::to_string(d));
      }
      index = c - 'a';
    } else {
      malformed(text, start, std::string("unexpected character '") + c + "'");
    }

    bool inverse = false;
    if (pos < text.size() && text[pos] == '\'') {
      inverse = true;
      ++pos;
    }
    std::uint64_t repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        malformed(text, pos, "expected a repetition count after '^'");
      }
      repeat = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        repeat = repeat * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
        if (repeat > Word::kMaxLength) malformed(text, start, "repetition count too large");
      }
    }
    if (identity_token) {
      if (inverse || repeat != 1) malformed(text, start, "the identity token takes no modifiers");
      continue;
    }
    if (raw.size() + repeat > Word::kMaxLength) malformed(text, start, "word too long");
    raw.insert(raw.end(), repeat, Letter{index, inverse});
  }
  return Word(alphabet, raw);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += letter_name(w.alphabet(), l);
  }
  return out;
}

}  // namespace arbora
