#include "arbora/gd_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "arbora/error.hpp"

namespace arbora {

namespace {

int wrap(int one_based, int d) { return ((one_based - 1) % d + d) % d; }

std::string indexed(std::string_view stem, int i) { return std::string(stem) + "_" + std::to_string(i); }

}  // namespace

Word gen(Alphabet alphabet, int one_based_index) {
  return Word::generator(alphabet, wrap(one_based_index, alphabet.arity()));
}

Word product_of(Alphabet alphabet, std::initializer_list<int> one_based_indices) {
  Word out(alphabet);
  for (int i : one_based_indices) out = out * gen(alphabet, i);
  return out;
}

RecursionTable build_table(int arity) {
  const Alphabet alphabet(arity);
  std::vector<GeneratorRecursion> generators;
  generators.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    const int next = (i + 1) % arity;
    std::vector<Word> sections(static_cast<std::size_t>(arity), Word(alphabet));
    sections[static_cast<std::size_t>(i)] = Word::generator(alphabet, i);
    sections[static_cast<std::size_t>(next)] = Word::generator(alphabet, next);
    generators.push_back({std::move(sections), Permutation::transposition(arity, i, next)});
  }
  return RecursionTable(alphabet, std::move(generators), TableOrigin::GdFamily);
}

void ElementCatalog::add(std::string name, Word word) {
  if (word.empty()) throw std::invalid_argument("catalog entry " + name + " is the empty word");
  if (contains(name)) throw std::invalid_argument("duplicate catalog entry " + name);
  entries_.emplace_back(std::move(name), std::move(word));
}

bool ElementCatalog::contains(std::string_view name) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

const Word& ElementCatalog::at(std::string_view name) const {
  for (const auto& [key, word] : entries_) {
    if (key == name) return word;
  }
  throw Error(ErrorCode::NameUnavailable, "no catalog entry `" + std::string(name) + "` for d=" +
                                              std::to_string(alphabet_.arity()));
}

ElementCatalog catalog(int arity) {
  const Alphabet A(arity);
  const int d = arity;
  ElementCatalog cat(A);
  auto a = [&](int i) { return gen(A, i); };

  Word g(A);
  for (int i = 1; i <= d; ++i) g = g * a(i);
  cat.add("g", g);

  // h = a2 a1 ad a(d-1) ... a3
  Word h = a(2) * a(1);
  for (int i = d; i >= 3; --i) h = h * a(i);
  cat.add("h", h);

  // h_i = a1 ... a(i-1) a_i a(i-1) ... a2
  for (int i = 1; i <= d; ++i) {
    Word w(A);
    for (int j = 1; j <= i; ++j) w = w * a(j);
    for (int j = i - 1; j >= 2; --j) w = w * a(j);
    cat.add(indexed("h", i), w);
  }

  // g_i = a1 ... a_i
  for (int i = 1; i < d; ++i) {
    Word w(A);
    for (int j = 1; j <= i; ++j) w = w * a(j);
    cat.add(indexed("g", i), w);
  }

  if (d % 2 == 1) {
    Word hf(A);
    for (int i = 2; i <= d; ++i) hf = hf * a(i);
    hf = hf * a(1);
    cat.add("hf", hf);

    // gf_i = a_i ... a1, the conjugators of the fractal witnesses.
    std::vector<Word> gf(static_cast<std::size_t>(d), Word(A));
    for (int i = 1; i <= d - 2; ++i) {
      gf[static_cast<std::size_t>(i)] = a(i) * (i > 1 ? gf[static_cast<std::size_t>(i - 1)] : Word(A));
      cat.add(indexed("gf", i), gf[static_cast<std::size_t>(i)]);
    }

    std::vector<Word> s(static_cast<std::size_t>(d), Word(A));
    for (int i = 2; i <= d - 1; ++i) {
      s[static_cast<std::size_t>(i)] = conjugate(power(a(i), 2), gf[static_cast<std::size_t>(i - 1)]);
    }
    Word evens(A);
    for (int i = 2; i <= d - 1; i += 2) evens = evens * s[static_cast<std::size_t>(i)];
    s[1] = evens * power(hf, -(d - 1)) * power(a(1), 2);
    for (int i = 1; i <= d - 1; ++i) cat.add(indexed("s", i), s[static_cast<std::size_t>(i)]);

    auto beta = [&](int i) { return commutator(a(i), a(i + 1)); };
    for (int i = 1; i <= d; ++i) cat.add(indexed("beta", i), beta(i));

    auto xi = [&](int i) { return commutator(power(a(i + 1), 2), a(i + 2)) * invert(beta(i) * beta(i + 1)); };
    for (int i = 1; i <= d; ++i) cat.add(indexed("xi", i), xi(i));

    for (int i = 1; i <= d; ++i) {
      Word w(A);
      if (d == 3) {
        w = xi(i);
      } else {
        for (int k = 1; k <= d - 4; k += 2) w = w * xi(i + k) * xi(i + k - 1);
        w = w * xi(i + d - 3);
      }
      cat.add(indexed("gbr", i), w);
    }
  }

  if (d == 3) {
    const Word xi = cat.at("xi_1");
    cat.add("rist_lift_ca", invert(a(3)) * invert(a(2)) * a(1) * a(3) * xi);
    cat.add("rist_lift_absq", power(conjugate(a(1), a(2)) * power(xi, 2), 2));
  }

  if (d == 4) {
    cat.add("w4", parse_word("a2 a1 a3' a2 a1' a4 a2' a1'", A));
  }
  return cat;
}

}  // namespace arbora
