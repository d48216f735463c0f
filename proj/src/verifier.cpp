#include "arbora/verifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arbora/error.hpp"
#include "arbora/gd_family.hpp"
#include "arbora/word_problem.hpp"

namespace arbora {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "FAIL";
}

std::optional<std::int64_t> Report::value(std::string_view key) const {
  for (const auto& [k, v] : payload) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string format_report_line(const Report& r) {
  std::string detail = r.detail;
  std::replace(detail.begin(), detail.end(), '\t', ' ');
  std::replace(detail.begin(), detail.end(), '\n', ' ');
  return r.check_id + "\t" + std::string(to_string(r.status)) + "\t" + detail;
}

Word WordSampler::word(Alphabet alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(max_len, 1));
  std::uniform_int_distribution<int> letter(0, 2 * alphabet.arity() - 1);
  std::vector<Letter> raw(length(engine_));
  for (auto& l : raw) {
    const int code = letter(engine_);
    l = Letter{code / 2, code % 2 == 1};
  }
  return Word(alphabet, raw);
}

Word WordSampler::positive_word(Alphabet alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(max_len, 1));
  std::uniform_int_distribution<int> letter(0, alphabet.arity() - 1);
  std::vector<Letter> raw(length(engine_));
  for (auto& l : raw) l = Letter{letter(engine_), false};
  return Word(alphabet, raw);
}

std::vector<Word> WordSampler::words(Alphabet alphabet, std::size_t count, std::size_t max_len) {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word(alphabet, max_len));
  return out;
}

std::vector<Word> all_reduced_words(Alphabet alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (int i = 0; i < alphabet.arity(); ++i) {
        for (bool inv : {false, true}) {
          const Letter l{i, inv};
          if (!prefix.empty() && cancels(prefix.back(), l)) continue;
          auto w = prefix;
          w.push_back(l);
          out.emplace_back(alphabet, w);
          next.push_back(std::move(w));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> all_positive_words(Alphabet alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (int i = 0; i < alphabet.arity(); ++i) {
        auto w = prefix;
        w.push_back(Letter{i, false});
        out.emplace_back(alphabet, w);
        next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return out;
}

namespace {

// Collects assertion outcomes for one check and keeps the first few
// counterexamples for the report.
class Tally {
 public:
  explicit Tally(std::string id) { report_.check_id = std::move(id); }

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checked_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 3) failures_.push_back(describe());
    }
    return ok;
  }

  void note(std::string key, std::int64_t value) { report_.payload.emplace_back(std::move(key), value); }
  void seed(std::uint64_t s) { report_.seed = s; }
  // Appended to the detail whether or not the check passes.
  void remark(std::string text) { remarks_.push_back(std::move(text)); }

  Report finish(const std::string& summary) {
    report_.payload.emplace_back("assertions", static_cast<std::int64_t>(checked_));
    report_.payload.emplace_back("failures", static_cast<std::int64_t>(failed_));
    std::ostringstream detail;
    if (failed_ == 0) {
      report_.status = Status::Pass;
      detail << summary << " (" << checked_ << " assertions)";
    } else {
      report_.status = Status::Fail;
      detail << failed_ << "/" << checked_ << " assertions failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) detail << (i ? "; " : "") << failures_[i];
    }
    for (const auto& r : remarks_) detail << "; " << r;
    if (report_.seed) detail << " [seed " << *report_.seed << "]";
    report_.detail = detail.str();
    return std::move(report_);
  }

 private:
  Report report_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> remarks_;
};

int wrap(int one_based, int d) { return ((one_based - 1) % d + d) % d; }

std::string str(const Word& w) { return format_word(w); }

/// The one-based cycle (p1 p2 ... pk), points taken mod d.
Permutation cycle(int d, const std::vector<int>& points) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    images[static_cast<std::size_t>(wrap(points[k], d))] = wrap(points[(k + 1) % points.size()], d);
  }
  return Permutation::from_images(std::move(images));
}

using Slots = std::vector<std::pair<int, Word>>;

std::vector<Word> expand(Alphabet A, const Slots& slots) {
  std::vector<Word> out(static_cast<std::size_t>(A.arity()), Word(A));
  for (const auto& [slot, w] : slots) out[static_cast<std::size_t>(wrap(slot, A.arity()))] = w;
  return out;
}

/// Compares psi(w) with an expected display, slot by slot as group elements.
void expect_wreath(Tally& t, const RecursionTable& table, const std::string& label, const Word& w,
                   const std::vector<Word>& sections, const Permutation& perm) {
  const auto wr = wreath(table, w);
  t.expect(wr.perm == perm, [&] {
    return label + ": lambda = " + format_cycles(wr.perm) + ", expected " + format_cycles(perm);
  });
  for (std::size_t x = 0; x < sections.size(); ++x) {
    t.expect(are_equal(table, wr.sections[x], sections[x]), [&] {
      return label + "|_" + std::to_string(x + 1) + " = " + str(wr.sections[x]) + ", expected " + str(sections[x]);
    });
  }
}

void expect_equal(Tally& t, const RecursionTable& table, const std::string& label, const Word& got,
                  const Word& want) {
  t.expect(are_equal(table, got, want), [&] { return label + ": " + str(got) + " != " + str(want); });
}

void expect_stabilizes(Tally& t, const RecursionTable& table, const std::string& label, const Word& w) {
  t.expect(first_level_permutation(table, w).is_identity(), [&] {
    return label + " not in St(1): lambda = " + format_cycles(first_level_permutation(table, w));
  });
}

/// pi_1 of an element of the first-level stabilizer.
Word pi1(const RecursionTable& table, const Word& w) { return section_at(table, w, 0); }

}  // namespace

Report check_generator_recursions(int arity) {
  const auto table = build_table(arity);
  const Alphabet A = table.alphabet();
  const int d = arity;
  Tally t("generator_recursions");

  // The recursions as they are displayed, transcribed to the table format.
  std::string display;
  if (d == 3) {
    display = "a = (a, b, e)(1 2)\nb = (e, b, c)(2 3)\nc = (a, e, c)(3 1)\n";
  } else {
    for (int i = 1; i <= d; ++i) {
      const int next = i % d + 1;
      display += "a" + std::to_string(i) + " = (";
      for (int x = 1; x <= d; ++x) {
        if (x > 1) display += ", ";
        display += x == i ? "a" + std::to_string(i) : x == next ? "a" + std::to_string(next) : "e";
      }
      display += ") (" + std::to_string(i) + " " + std::to_string(next) + ")\n";
    }
  }
  const auto expected = parse_table(display);
  for (int i = 0; i < d; ++i) {
    const auto& got = table.generator(i);
    const auto& want = expected.generator(i);
    const std::string name = letter_name(A, Letter{i, false});
    t.expect(got.perm == want.perm, [&] { return name + ": lambda " + format_cycles(got.perm); });
    for (std::size_t x = 0; x < got.sections.size(); ++x) {
      t.expect(got.sections[x] == want.sections[x], [&] {
        return name + "|_" + std::to_string(x + 1) + " = " + str(got.sections[x]) + ", expected " +
               str(want.sections[x]);
      });
    }
    t.expect(got.perm.order() == 2, [&] { return name + " does not act as a transposition"; });
    const auto nonempty = std::count_if(got.sections.begin(), got.sections.end(), [](const Word& w) {
      return !w.empty();
    });
    t.expect(nonempty == 2 && std::all_of(got.sections.begin(), got.sections.end(),
                                          [](const Word& w) { return w.size() <= 1 && w.is_positive(); }),
             [&] { return name + " sections are not two single generators"; });
  }
  return t.finish(std::to_string(d) + " generator recursions match the displayed table");
}

Report check_exponent_laws(const RecursionTable& table, std::span<const Word> sample) {
  const int d = table.arity();
  Tally t("exponent_laws");
  std::size_t positive = 0;
  for (const Word& w : sample) {
    const auto wr = wreath(table, w);
    const auto s = exponent_vector(w);
    ExponentVector total{std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)};
    std::size_t section_length = 0;
    for (const auto& sec : wr.sections) {
      total = total + exponent_vector(sec);
      section_length += sec.size();
    }
    const std::string label = "w = " + str(w);

    if (w.is_positive()) {
      ++positive;
      t.expect(section_length == 2 * w.size(), [&] {
        return label + ": sections have total length " + std::to_string(section_length);
      });
    }
    t.expect(total.total() == 2 * s.total(), [&] {
      return label + ": section exponent total " + std::to_string(total.total()) + " != 2*" +
             std::to_string(s.total());
    });
    for (int i = 0; i < d; ++i) {
      const auto prev = static_cast<std::size_t>((i + d - 1) % d);
      t.expect(total[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(i)] + s[prev], [&] {
        return label + ": shift law fails at a" + std::to_string(i + 1);
      });
    }
    if (d % 2 == 1) {
      const std::int64_t all = total.total();
      for (int i = 0; i < d; ++i) {
        std::int64_t recovered = all / 2;
        for (int j = 1; j <= (d - 1) / 2; ++j) recovered -= total[static_cast<std::size_t>((i + 2 * j) % d)];
        t.expect(all % 2 == 0 && recovered == s[static_cast<std::size_t>(i)], [&] {
          return label + ": inversion formula gives " + std::to_string(recovered) + " for a" +
                 std::to_string(i + 1);
        });
      }
    }
    if (d == 3) {
      const std::int64_t t1 = total[0], t2 = total[1], t3 = total[2];
      t.expect((t1 + t2 - t3) == 2 * s[0] && (t2 + t3 - t1) == 2 * s[1] && (t3 + t1 - t2) == 2 * s[2],
               [&] { return label + ": closed forms for d=3 fail"; });
    }
  }
  t.note("words", static_cast<std::int64_t>(sample.size()));
  t.note("positive_words", static_cast<std::int64_t>(positive));
  return t.finish(std::to_string(sample.size()) + " words (" + std::to_string(positive) +
                  " positive) satisfy doubling, shift and inversion laws");
}

Report check_section_tables(int arity) {
  const auto table = build_table(arity);
  const Alphabet A = table.alphabet();
  const int d = arity;
  Tally t("section_tables");
  auto a = [&](int i) { return gen(A, i); };
  auto ai = [&](int i) { return invert(gen(A, i)); };
  auto tr = [&](int i) { return cycle(d, {i, i + 1}); };

  std::int64_t matched_table = 0;
  if (d == 3) {
    struct Entry {
      const char* word;
      const char* sections[3];
      const char* perm;
    };
    // lambda_1 = (1 3 2), lambda_2 = (1 2 3)
    const Entry entries[] = {
        {"ab", {"ab", "b", "c"}, "(1 3 2)"}, {"ba", {"a", "b", "cb"}, "(1 2 3)"}, {"aa", {"ab", "ba", "e"}, "()"},
        {"bc", {"a", "bc", "c"}, "(1 3 2)"}, {"cb", {"ac", "b", "c"}, "(1 2 3)"}, {"bb", {"e", "bc", "cb"}, "()"},
        {"ca", {"a", "b", "ca"}, "(1 3 2)"}, {"ac", {"a", "ba", "c"}, "(1 2 3)"}, {"cc", {"ac", "e", "ca"}, "()"},
    };
    for (const auto& e : entries) {
      std::vector<Word> sections;
      for (const char* s : e.sections) sections.push_back(parse_word(s, A));
      const auto wr = wreath(table, parse_word(e.word, A));
      bool ok = wr.perm == parse_cycles(e.perm, 3);
      for (std::size_t x = 0; x < 3; ++x) ok = ok && are_equal(table, wr.sections[x], sections[x]);
      t.expect(ok, [&] { return std::string(e.word) + " does not match its table entry"; });
      if (ok) ++matched_table;
    }
    t.note("table_entries_matched", matched_table);
  }

  std::size_t max_inverse_section = 0;
  for (int i = 1; i <= d; ++i) {
    const std::string ii = std::to_string(i);
    expect_wreath(t, table, "a" + ii + "^2", a(i) * a(i), expand(A, {{i, a(i) * a(i + 1)}, {i + 1, a(i + 1) * a(i)}}),
                  Permutation::identity(d));
    for (int j = 1; j <= d; ++j) {
      if (wrap(i, d) == wrap(j, d)) continue;
      const std::string label = "a" + ii + " a" + std::to_string(j);
      Slots pq, inv;
      if (wrap(j, d) == wrap(i + 1, d)) {
        pq = {{i, a(i) * a(i + 1)}, {i + 1, a(i + 1)}, {i + 2, a(i + 2)}};
        inv = {{i + 1, ai(i)}, {i + 2, a(i + 2)}};
      } else if (wrap(j, d) == wrap(i - 1, d)) {
        pq = {{i, a(i)}, {i - 1, a(i - 1)}, {i + 1, a(i + 1) * a(i)}};
        inv = {{i - 1, a(i - 1)}, {i, ai(i + 1)}};
      } else {
        pq = {{i, a(i)}, {j, a(j)}, {i + 1, a(i + 1)}, {j + 1, a(j + 1)}};
        inv = {{i, ai(i + 1)}, {i + 1, ai(i)}, {j, a(j)}, {j + 1, a(j + 1)}};
      }
      expect_wreath(t, table, label, a(i) * a(j), expand(A, pq), tr(i) * tr(j));
      const Word w = ai(i) * a(j);
      expect_wreath(t, table, "a" + ii + "' a" + std::to_string(j), w, expand(A, inv), tr(i) * tr(j));
      for (int x = 0; x < d; ++x) {
        const auto len = section_at(table, w, x).size();
        max_inverse_section = std::max(max_inverse_section, len);
        t.expect(len <= 1, [&] {
          return "|(a" + ii + "' a" + std::to_string(j) + ")|_" + std::to_string(x + 1) + "| = " + std::to_string(len);
        });
      }
    }
  }
  t.note("max_inverse_pair_section_length", static_cast<std::int64_t>(max_inverse_section));
  std::string summary = "all two-letter wreath recursions match";
  if (d == 3) summary += " (" + std::to_string(matched_table) + "/9 table entries)";
  summary += "; longest a_i' a_j section has length " + std::to_string(max_inverse_section);
  return t.finish(summary);
}


Report check_lemma_chains(int arity) {
  const auto table = build_table(arity);
  const auto cat = catalog(arity);
  const Alphabet A = table.alphabet();
  const int d = arity;
  Tally t("lemma_chains");
  auto a = [&](int i) { return gen(A, i); };
  auto ascending = [&](int from, int to) {
    Word w(A);
    for (int j = from; j <= to; ++j) w = w * a(j);
    return w;
  };
  auto descending = [&](int from, int to) {
    Word w(A);
    for (int j = from; j >= to; --j) w = w * a(j);
    return w;
  };
  auto sec = [&](const Word& w, int slot) { return section_at(table, w, wrap(slot, d)); };
  auto range = [](int from, int to) {
    std::vector<int> v;
    for (int j = from; from <= to ? j <= to : j >= to; from <= to ? ++j : --j) v.push_back(j);
    return v;
  };

  // g = a1 ... ad and h = a2 a1 ad ... a3 swap roles under sections of powers.
  const Word g = cat.at("g");
  const Word h = cat.at("h");
  t.expect(first_level_permutation(table, g) == cycle(d, range(d, 2)), [&] { return "lambda_g"; });
  expect_equal(t, table, "g|_2", sec(g, 2), a(2) * a(1));
  for (int i = 3; i <= d; ++i) expect_equal(t, table, "g|_" + std::to_string(i), sec(g, i), a(i));
  const Word g_pow = power(g, d - 1);
  expect_stabilizes(t, table, "g^(d-1)", g_pow);
  Word folded = sec(g, 2);
  for (int i = d; i >= 3; --i) folded = folded * sec(g, i);
  expect_equal(t, table, "g|_2 g|_d ... g|_3", folded, h);
  expect_equal(t, table, "g^(d-1)|_2", sec(g_pow, 2), h);

  std::vector<int> h_cycle{1, 2};
  for (int i = 4; i <= d; ++i) h_cycle.push_back(i);
  t.expect(first_level_permutation(table, h) == cycle(d, h_cycle), [&] {
    return "lambda_h = " + format_cycles(first_level_permutation(table, h));
  });
  expect_equal(t, table, "h|_1", sec(h, 1), a(1));
  expect_equal(t, table, "h|_2", sec(h, 2), a(2) * a(3));
  for (int i = 4; i <= d; ++i) expect_equal(t, table, "h|_" + std::to_string(i), sec(h, i), a(i));
  const Word h_pow = power(h, d - 1);
  expect_stabilizes(t, table, "h^(d-1)", h_pow);
  expect_equal(t, table, "h^(d-1)|_1", sec(h_pow, 1), g);
  // Second turn of the alternation: g^((d-1)^2)|_21 = g.
  const Word g_sq = power(g, static_cast<std::int64_t>(d - 1) * (d - 1));
  expect_equal(t, table, "g^((d-1)^2)|_21", section(table, g_sq, Vertex({1, 0}, d)), g);

  // h_i: lambda = (i+1 2 1), h_i^3|_1 = h_{i+1}; h_1 = a1 needs only a square.
  const Word h1_sq = power(cat.at("h_1"), 2);
  expect_stabilizes(t, table, "h_1^2", h1_sq);
  expect_equal(t, table, "h_1^2|_1", sec(h1_sq, 1), cat.at("h_2"));
  for (int i = 2; i <= d - 1; ++i) {
    const std::string n = std::to_string(i);
    const Word hi = cat.at("h_" + n);
    t.expect(first_level_permutation(table, hi) == cycle(d, {i + 1, 2, 1}), [&] { return "lambda_{h_" + n + "}"; });
    expect_equal(t, table, "h_" + n + "|_1", sec(hi, 1), ascending(1, i));
    expect_equal(t, table, "h_" + n + "|_2", sec(hi, 2), a(2));
    expect_equal(t, table, "h_" + n + "|_" + std::to_string(i + 1), sec(hi, i + 1), descending(i + 1, 3));
    const Word cube = power(hi, 3);
    expect_stabilizes(t, table, "h_" + n + "^3", cube);
    expect_equal(t, table, "h_" + n + "^3|_1", sec(cube, 1), cat.at("h_" + std::to_string(i + 1)));
  }
  const Word hd = cat.at("h_" + std::to_string(d));
  expect_stabilizes(t, table, "h_d", hd);
  expect_equal(t, table, "h_d|_1", sec(hd, 1), g);

  // g_i: lambda = (i+1 i ... 1), g_i^(i+1)|_1 = h_{i+1}.
  for (int i = 1; i <= d - 1; ++i) {
    const std::string n = std::to_string(i);
    const Word gi = cat.at("g_" + n);
    t.expect(first_level_permutation(table, gi) == cycle(d, range(i + 1, 1)), [&] { return "lambda_{g_" + n + "}"; });
    expect_equal(t, table, "g_" + n + "|_1", sec(gi, 1), gi);
    for (int j = 2; j <= i + 1; ++j) expect_equal(t, table, "g_" + n + "|_" + std::to_string(j), sec(gi, j), a(j));
    const Word p = power(gi, i + 1);
    expect_stabilizes(t, table, "g_" + n + "^(i+1)", p);
    expect_equal(t, table, "g_" + n + "^(i+1)|_1", sec(p, 1), cat.at("h_" + std::to_string(i + 1)));
  }
  return t.finish("g/h alternation, h_i and g_i section chains hold for d=" + std::to_string(d));
}

Report check_noncontracting_witness(int arity, std::uint64_t probe_bound) {
  const auto table = build_table(arity);
  const Word g = catalog(arity).at("g");
  Tally t("noncontracting_witness");
  for (std::size_t level = 1; level <= 4; ++level) {
    const auto v = Vertex::repeated(0, level, arity);
    t.expect(act_vertex(table, g, v) == v, [&] { return "g moves 1^" + std::to_string(level); });
    expect_equal(t, table, "g|_1^" + std::to_string(level), section(table, g, v), g);
  }
  const auto order = order_probe(table, g, probe_bound);
  t.expect(!order.is_finite(), [&] { return "g has order " + std::to_string(order.value); });
  t.note("probe_bound", static_cast<std::int64_t>(probe_bound));
  return t.finish("g = " + format_word(g) + " fixes 1, g|_1 = g, no relation g^n = e for n <= " +
                  std::to_string(probe_bound));
}

Report check_transitivity(const RecursionTable& table, std::size_t level, std::uint64_t cap) {
  const int d = table.arity();
  const std::uint64_t n = level_size(d, level, cap);
  Tally t("transitivity");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<std::vector<int>> queue{std::vector<int>(level, 0)};
  seen[0] = true;
  std::uint64_t reached = 1;
  auto index_of = [&](const std::vector<int>& path) {
    std::uint64_t index = 0;
    for (int s : path) index = index * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(s);
    return static_cast<std::size_t>(index);
  };
  while (!queue.empty()) {
    const Vertex v(std::move(queue.front()), d);
    queue.pop_front();
    for (int i = 0; i < d; ++i) {
      const Vertex u = act_vertex(table, Word::generator(table.alphabet(), i), v);
      std::vector<int> path(u.symbols().begin(), u.symbols().end());
      const auto index = index_of(path);
      if (!seen[index]) {
        seen[index] = true;
        ++reached;
        queue.push_back(std::move(path));
      }
    }
  }
  t.expect(reached == n, [&] {
    return "orbit of 1^" + std::to_string(level) + " has " + std::to_string(reached) + " of " + std::to_string(n) +
           " vertices";
  });
  t.note("level", static_cast<std::int64_t>(level));
  t.note("orbit_size", static_cast<std::int64_t>(reached));
  return t.finish("orbit of 1^" + std::to_string(level) + " covers all " + std::to_string(n) + " vertices");
}

Report check_fractal_witnesses(int arity) {
  if (arity % 2 == 0) throw Error(ErrorCode::ArityMismatch, "fractal witnesses are built for odd d");
  const auto table = build_table(arity);
  const auto cat = catalog(arity);
  const Alphabet A = table.alphabet();
  const int d = arity;
  const int half = (d - 1) / 2;
  Tally t("fractal_witnesses");
  auto a = [&](int i) { return gen(A, i); };
  auto descending = [&](int from, int to) {
    Word w(A);
    for (int j = from; j >= to; --j) w = w * a(j);
    return w;
  };
  auto s = [&](int i) { return cat.at("s_" + std::to_string(i)); };
  auto product = [&](int first, int last) {  // s_first s_{first+2} ... s_last
    Word w(A);
    for (int i = first; i <= last; i += 2) w = w * s(i);
    return w;
  };
  auto pi = [&](const std::string& label, const Word& w) {
    expect_stabilizes(t, table, label, w);
    return pi1(table, w);
  };
  std::vector<bool> recovered(static_cast<std::size_t>(d), false);
  auto recover = [&](int i, const std::string& label, const Word& w) {
    const Word image = pi(label, w);
    if (t.expect(are_equal(table, image, a(i)), [&] { return "pi_1(" + label + ") = " + str(image) + " != a" + std::to_string(i); })) {
      recovered[static_cast<std::size_t>(wrap(i, d))] = true;
    }
  };

  std::vector<int> down;
  for (int j = d; j >= 1; --j) down.push_back(j);
  t.expect(first_level_permutation(table, cat.at("g_" + std::to_string(d - 1))) == cycle(d, down),
           [&] { return "a1 ... a(d-1) is not a d-cycle"; });

  for (int i = 2; i <= d - 1; ++i) {
    const Word gf = cat.at("gf_" + std::to_string(i - 1));
    const std::string n = std::to_string(i);
    expect_equal(t, table, "gf_" + std::to_string(i - 1) + "|_" + n, section_at(table, gf, i - 1), descending(i, 2));
    t.expect(act_vertex(table, invert(gf), Vertex({0}, d)) == Vertex({i - 1}, d),
             [&] { return "gf_" + std::to_string(i - 1) + "^-1 does not send 1 to " + n; });
    Word expected(A);
    if (i == 2) {
      expected = a(3) * a(2);
    } else {
      for (int j = 2; j <= i - 1; ++j) expected = expected * invert(a(j));
      expected = expected * descending(i + 1, 2);
    }
    expect_equal(t, table, "pi_1(s_" + n + ")", pi("s_" + n, s(i)), expected);
  }

  const Word hf = cat.at("hf");
  std::vector<int> hf_cycle;
  for (int j = d; j >= 3; --j) hf_cycle.push_back(j);
  hf_cycle.push_back(1);
  t.expect(first_level_permutation(table, hf) == cycle(d, hf_cycle), [&] { return "lambda_hf"; });
  expect_equal(t, table, "hf|_1", section_at(table, hf, 0), a(1));
  expect_equal(t, table, "hf|_3", section_at(table, hf, 2), a(3) * a(2));
  for (int j = 4; j <= d; ++j) expect_equal(t, table, "hf|_" + std::to_string(j), section_at(table, hf, j - 1), a(j));
  const Word hf_pow = power(hf, d - 1);
  expect_equal(t, table, "pi_1(hf^(d-1))", pi("hf^(d-1)", hf_pow), a(1) * descending(d, 2));

  for (int i = 1; i <= half; ++i) {
    expect_equal(t, table, "pi_1(s_2 ... s_" + std::to_string(2 * i) + ")",
                 pi("s_2 ... s_" + std::to_string(2 * i), product(2, 2 * i)), descending(2 * i + 1, 2));
  }
  recover(1, "hf^(d-1) (s_2 ... s_(d-1))^-1", hf_pow * invert(product(2, d - 1)));
  expect_equal(t, table, "pi_1(a1^2)", pi("a1^2", power(a(1), 2)), a(1) * a(2));
  recover(2, "s_1", s(1));
  for (int i = 1; i <= half; ++i) {
    expect_equal(t, table, "pi_1(s_1 ... s_" + std::to_string(2 * i - 1) + ")",
                 pi("s_1 ... s_" + std::to_string(2 * i - 1), product(1, 2 * i - 1)), descending(2 * i, 2));
  }
  for (int i = 2; i <= half; ++i) {
    recover(2 * i, "(s_1 ... s_" + std::to_string(2 * i - 1) + ")(s_2 ... s_" + std::to_string(2 * i - 2) + ")^-1",
            product(1, 2 * i - 1) * invert(product(2, 2 * i - 2)));
  }
  for (int i = 1; i <= half; ++i) {
    recover(2 * i + 1, "(s_2 ... s_" + std::to_string(2 * i) + ")(s_1 ... s_" + std::to_string(2 * i - 1) + ")^-1",
            product(2, 2 * i) * invert(product(1, 2 * i - 1)));
  }
  const auto count = std::count(recovered.begin(), recovered.end(), true);
  t.expect(count == d, [&] { return "only " + std::to_string(count) + " generators recovered"; });
  t.note("generators_recovered", count);
  return t.finish("all " + std::to_string(count) + " generators lie in pi_1(St(1))");
}

Report check_branch_witnesses(int arity) {
  if (arity % 2 == 0) throw Error(ErrorCode::ArityMismatch, "branch witnesses are built for odd d");
  const auto table = build_table(arity);
  const auto cat = catalog(arity);
  const Alphabet A = table.alphabet();
  const int d = arity;
  const auto id = Permutation::identity(d);
  Tally t("branch_witnesses");
  auto a = [&](int i) { return gen(A, i); };
  auto ai = [&](int i) { return invert(gen(A, i)); };
  auto named = [&](const char* stem, int i) { return cat.at(std::string(stem) + "_" + std::to_string(wrap(i, d) + 1)); };

  // Non-adjacent generators commute.
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 2; j <= d; ++j) {
      if (i == 1 && j == d) continue;
      expect_equal(t, table, "[a" + std::to_string(i) + ", a" + std::to_string(j) + "]", commutator(a(i), a(j)), Word(A));
    }
  }

  std::int64_t slots_reached = 0;
  for (int i = 1; i <= d; ++i) {
    const std::string n = std::to_string(i);
    const Permutation double_swap = cycle(d, {i, i + 2}) * cycle(d, {i + 1, i + 3});
    expect_wreath(t, table, "beta_" + n, named("beta", i), expand(A, {{i, ai(i + 1)}, {i + 1, a(i + 1)}}),
                  cycle(d, {i, i + 1, i + 2}));
    expect_wreath(t, table, "beta_" + n + " beta_" + n + "+1", named("beta", i) * named("beta", i + 1),
                  expand(A, {{i, ai(i + 1) * ai(i + 2)}, {i + 1, a(i + 1) * a(i + 2)}}), double_swap);
    const Word c = commutator(power(a(i), 2), a(i + 1));
    expect_wreath(t, table, "[a_i^2, a_i+1], i=" + n, c,
                  expand(A, {{i + 1, ai(i) * ai(i + 1)}, {i + 2, a(i) * a(i + 1)}}), id);
    const Word c_a = conjugate(c, a(i));
    expect_wreath(t, table, "[a_i^2, a_i+1]^a_i, i=" + n, c_a,
                  expand(A, {{i, ai(i + 1) * ai(i)}, {i + 2, a(i) * a(i + 1)}}), id);
    const Word xi = named("xi", i);
    expect_wreath(t, table, "xi_" + n, xi, expand(A, {}), double_swap);

    const Word left = conjugate(c_a, invert(xi));
    expect_wreath(t, table, "([a_i^2, a_i+1]^a_i)^(xi_i^-1), i=" + n, left,
                  expand(A, {{i, a(i) * a(i + 1)}, {i + 2, ai(i + 1) * ai(i)}}), id);
    const Word g_next = named("gbr", i + 1);
    const auto lambda = first_level_permutation(table, g_next);
    t.expect(lambda(wrap(i + 1, d)) == wrap(i, d) && lambda(wrap(i + 2, d)) == wrap(i + 2, d),
             [&] { return "gbr_" + std::to_string(wrap(i + 1, d) + 1) + " acts as " + format_cycles(lambda); });
    const Word right = conjugate(c, g_next);
    expect_wreath(t, table, "[a_i^2, a_i+1]^gbr_i+1, i=" + n, right,
                  expand(A, {{i, ai(i) * ai(i + 1)}, {i + 2, a(i) * a(i + 1)}}), id);

    const Word target = commutator(a(i), a(i + 1));
    const Word lifted = right * left;
    expect_wreath(t, table, "lift of [a_i, a_i+1], i=" + n, lifted, expand(A, {{i, target}}), id);
    t.expect(exponent_vector(lifted).is_zero(), [&] { return "lift " + n + " has nonzero exponent vector"; });

    // Conjugating by products of xi's carries the lift to every slot.
    std::vector<std::optional<Word>> mover(static_cast<std::size_t>(d));
    mover[static_cast<std::size_t>(wrap(i, d))] = Word(A);
    std::deque<int> queue{wrap(i, d)};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int k = 1; k <= d; ++k) {
        const Word step = *mover[static_cast<std::size_t>(x)] * named("xi", k);
        const int y = first_level_permutation(table, step)(wrap(i, d));
        if (!mover[static_cast<std::size_t>(y)]) {
          mover[static_cast<std::size_t>(y)] = step;
          queue.push_back(y);
        }
      }
    }
    for (int j = 0; j < d; ++j) {
      const auto& m = mover[static_cast<std::size_t>(j)];
      if (!t.expect(m.has_value(), [&] { return "slot " + std::to_string(j + 1) + " unreachable from " + n; })) continue;
      expect_wreath(t, table, "lift of [a_i, a_i+1] moved to slot " + std::to_string(j + 1) + ", i=" + n,
                    conjugate(lifted, *m), expand(A, {{j + 1, target}}), id);
      ++slots_reached;
    }
  }
  t.note("placements", slots_reached);

  // For d = 3 the displayed xi, (e,e,e)(1 3 2), is the inverse of the element
  // the defining product yields. Report whether the construction goes
  // through with that element instead.
  if (d == 3) {
    std::int64_t repaired = 0;
    const Word xi = invert(cat.at("xi_1"));
    for (int i = 1; i <= d; ++i) {
      const Word c = commutator(power(a(i), 2), a(i + 1));
      const Word lifted = conjugate(c, xi) * conjugate(conjugate(c, a(i)), invert(xi));
      const auto wr = wreath(table, lifted);
      bool ok = wr.perm.is_identity();
      const auto want = expand(A, {{i, commutator(a(i), a(i + 1))}});
      for (int x = 0; x < d && ok; ++x) ok = are_equal(table, wr.sections[static_cast<std::size_t>(x)], want[static_cast<std::size_t>(x)]);
      repaired += ok ? 1 : 0;
    }
    t.note("lifts_with_inverse_xi", repaired);
    t.remark("xi_1 computes to " + format_cycles(first_level_permutation(table, cat.at("xi_1"))) + "; with xi^-1 in its place " +
             std::to_string(repaired) + "/3 lifts hold");
  }
  return t.finish("every [a_i, a_i+1] lifts to each of the " + std::to_string(d) + " slots");
}

Report check_free_semigroup(int arity, std::size_t max_len, std::uint64_t pair_budget) {
  const auto table = build_table(arity);
  const Alphabet A = table.alphabet();
  const auto words = all_positive_words(A, max_len);
  const bool prefilter = arity % 2 == 1;
  Tally t("free_semigroup");

  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < words.size(); ++k) {
    groups[prefilter ? exponent_vector(words[k]).counts : std::vector<std::int64_t>{}].push_back(k);
  }
  std::uint64_t pairs = 0;
  for (const auto& [key, members] : groups) pairs += members.size() * (members.size() - 1) / 2;
  if (pairs > pair_budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(pairs) + " pairs to compare exceeds the budget of " + std::to_string(pair_budget));
  }

  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& [key, members] : groups) {
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        const Word& u = words[members[p]];
        const Word& v = words[members[q]];
        if (!t.expect(!are_equal(table, u, v), [&] { return str(u) + " = " + str(v); })) {
          parent[root(members[q])] = root(members[p]);
        }
      }
    }
  }
  std::int64_t distinct = 0;
  for (std::size_t k = 0; k < words.size(); ++k) distinct += root(k) == k ? 1 : 0;
  std::int64_t expected = 0;
  std::int64_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) expected += (layer *= arity);
  t.expect(distinct == expected, [&] {
    return std::to_string(distinct) + " distinct elements, expected " + std::to_string(expected);
  });
  t.note("words", static_cast<std::int64_t>(words.size()));
  t.note("distinct", distinct);
  t.note("expected", expected);
  t.note("pairs_searched", static_cast<std::int64_t>(pairs));
  return t.finish(std::to_string(distinct) + " distinct elements among positive words of length <= " +
                  std::to_string(max_len) + ", " + std::to_string(pairs) + " pairs searched");
}

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

Report check_hk_and_branch(std::size_t level, std::span<const Word> sample, std::uint64_t seed) {
  for (const Word& w : sample) {
    if (w.arity() != 3) throw Error(ErrorCode::ArityMismatch, "H_k is defined for d = 3 only");
  }
  if (level < 1) throw Error(ErrorCode::LevelTooLarge, "H_k needs k >= 1");
  const auto table = build_table(3);
  const auto cat = catalog(3);
  const Alphabet A = table.alphabet();
  const std::int64_t modulus = std::int64_t{1} << (level + 1);
  Tally t("hk_and_branch_k" + std::to_string(level));
  t.seed(seed);
  const Word a = gen(A, 1), b = gen(A, 2), c = gen(A, 3);
  auto in_hk = [&](const Word& w) { return floor_mod(exponent_vector(w).total(), modulus) == 0; };

  // (a) lifts into the rigid stabilizer of vertex 1.
  expect_wreath(t, table, "c'b'ac xi", cat.at("rist_lift_ca"), expand(A, {{1, invert(c) * a}}),
                Permutation::identity(3));
  expect_wreath(t, table, "(a^b xi^2)^2", cat.at("rist_lift_absq"), expand(A, {{1, power(a * b, 2)}}),
                Permutation::identity(3));
  {
    // The second lift holds with xi in place of xi^2 (xi^2 = xi^-1 here).
    const Word alt = power(conjugate(a, b) * cat.at("xi_1"), 2);
    const auto wr = wreath(table, alt);
    const bool ok = wr.perm.is_identity() && are_equal(table, wr.sections[0], power(a * b, 2)) &&
                    wr.sections[1].empty() && wr.sections[2].empty();
    t.note("absq_lift_with_xi", ok ? 1 : 0);
    t.remark(std::string("(a^b xi)^2 = ((ab)^2, e, e) ") + (ok ? "holds" : "fails"));
  }
  if (level == 1) {
    t.expect(in_hk(invert(c) * a) && in_hk(power(a * b, 2)), [&] { return "lifted sections not in H_1"; });
    // a, a^2, a^3 are excluded by the exponent criterion.
    for (int s = 1; s <= 3; ++s) {
      t.expect(!in_hk(power(a, s)), [&] { return "a^" + std::to_string(s) + " lies in H_1"; });
    }
    t.expect(in_hk(power(a, 4)), [&] { return "a^4 not in H_1"; });
  }

  // (b) g = a^i h with h in H_k and 0 <= i < 2^(k+1).
  for (const Word& g : sample) {
    const auto i = floor_mod(exponent_vector(g).total(), modulus);
    const Word h = power(a, -i) * g;
    t.expect(in_hk(h), [&] { return "a^-" + std::to_string(i) + " " + str(g) + " not in H_k"; });
    expect_equal(t, table, "a^i h for g = " + str(g), power(a, i) * h, g);
  }

  // (c) level-k sections of stabilizer elements fall in cosets a^j H_k.
  std::set<std::vector<std::int64_t>> tuples;
  for (const Word& w : sample) {
    const auto perm = level_permutation(table, w, level);
    std::uint64_t order = 1;
    {
      std::vector<bool> seen(perm.size(), false);
      for (std::size_t start = 0; start < perm.size(); ++start) {
        std::uint64_t len = 0;
        for (std::size_t x = start; !seen[x]; x = perm.image(x)) {
          seen[x] = true;
          ++len;
        }
        if (len > 0) order = std::lcm(order, len);
      }
    }
    const Word g = power(w, static_cast<std::int64_t>(order));
    if (!t.expect(in_level_stabilizer(table, g, level), [&] { return str(w) + "^" + std::to_string(order) + " not in St(k)"; })) {
      continue;
    }
    std::vector<std::int64_t> tuple;
    std::int64_t section_total = 0;
    for (std::size_t index = 0; index < perm.size(); ++index) {
      const Word s = section(table, g, perm.vertex(index));
      const auto total = exponent_vector(s).total();
      section_total += total;
      const auto j = floor_mod(total, modulus);
      t.expect(j >= 0 && j < modulus && in_hk(power(a, -j) * s), [&] { return "section coset of " + str(s); });
      tuple.push_back(j);
    }
    t.expect(section_total == (std::int64_t{1} << level) * exponent_vector(g).total(),
             [&] { return "level-k exponent totals of " + str(w) + " do not scale by 2^k"; });
    tuples.insert(std::move(tuple));
  }
  // (2^(k+1))^(3^k) cosets; saturates for k >= 2.
  std::int64_t bound = 1;
  std::uint64_t vertices = 1;
  for (std::size_t k = 0; k < level; ++k) vertices *= 3;
  for (std::uint64_t k = 0; k < vertices && bound < (std::int64_t{1} << 62) / modulus; ++k) bound *= modulus;
  t.expect(static_cast<std::int64_t>(tuples.size()) <= bound, [&] { return "more coset tuples than the bound"; });
  t.note("samples", static_cast<std::int64_t>(sample.size()));
  t.note("coset_tuples", static_cast<std::int64_t>(tuples.size()));
  t.note("index_bound", bound);
  return t.finish("lifts verified, " + std::to_string(sample.size()) + " words split as a^i h, " +
                  std::to_string(tuples.size()) + " coset tuples seen (bound " + std::to_string(bound) + ")");
}

Report check_parity_and_even_d(std::uint64_t seed, std::size_t stabilizer_samples) {
  Tally t("parity_and_even_d");
  t.seed(seed);
  {
    const auto table = build_table(3);
    const Alphabet A = table.alphabet();
    WordSampler sampler(seed);
    const Word h3 = catalog(3).at("h_3");
    t.expect(first_level_permutation(table, h3).is_identity() && h3.size() % 2 == 0,
             [&] { return "h_3 is not an even-length stabilizer element"; });
    std::size_t found = 0;
    std::size_t drawn = 0;
    while (found < stabilizer_samples && drawn < 1000 * stabilizer_samples + 1000) {
      const Word w = sampler.word(A, 10);
      ++drawn;
      if (!first_level_permutation(table, w).is_identity()) continue;
      ++found;
      t.expect(w.size() % 2 == 0, [&] { return str(w) + " fixes level 1 but has odd length"; });
    }
    t.expect(found == stabilizer_samples, [&] { return "only " + std::to_string(found) + " stabilizer samples"; });
    t.note("stabilizer_samples", static_cast<std::int64_t>(found));
  }
  {
    const auto table = build_table(4);
    const Word w4 = catalog(4).at("w4");
    const auto ev = exponent_vector(w4);
    t.expect(is_identity(table, w4).is_identity, [&] { return "w4 is not a relator of G_4"; });
    t.expect(!ev.is_zero(), [&] { return "w4 has zero exponent vector"; });
    t.expect(ev == ExponentVector{{-1, 1, -1, 1}}, [&] { return "w4 exponent vector differs from (-1,1,-1,1)"; });
    const auto wr = wreath(table, w4);
    t.expect(wr.is_trivial(), [&] { return "w4 has a nontrivial wreath recursion"; });
  }
  return t.finish(std::to_string(stabilizer_samples) +
                  " random St(1) words of G_3 have even length; w4 = e in G_4 with exponents (-1,1,-1,1)");
}

Report check_relator_exponent_law(const RecursionTable& table, std::span<const Word> words) {
  if (table.arity() % 2 == 0) throw Error(ErrorCode::ArityMismatch, "the exponent law holds for odd d");
  Tally t("relator_exponent_law");
  std::int64_t relators = 0;
  std::int64_t freely_trivial = 0;
  const SolverOptions generic{Strategy::Generic};
  for (const Word& w : words) {
    if (w.empty()) {
      ++freely_trivial;
      continue;
    }
    if (!is_identity(table, w, generic).is_identity) continue;
    ++relators;
    t.expect(exponent_vector(w).is_zero(), [&] { return "relator " + str(w) + " has nonzero exponents"; });
  }
  t.note("words", static_cast<std::int64_t>(words.size()));
  t.note("relators", relators);
  t.note("freely_trivial", freely_trivial);
  return t.finish(std::to_string(words.size()) + " words searched, " + std::to_string(relators) +
                  " nontrivial relators (all with zero exponent vector), " + std::to_string(freely_trivial) +
                  " freely reduce to e");
}

Report check_abelianization(const RecursionTable& table, std::uint64_t seed, std::size_t pairs,
                            std::size_t max_len) {
  if (table.arity() % 2 == 0) throw Error(ErrorCode::ArityMismatch, "abelianization check needs odd d");
  Tally t("abelianization");
  t.seed(seed);
  WordSampler sampler(seed);
  const SolverOptions generic{Strategy::Generic};
  for (std::size_t k = 0; k < pairs; ++k) {
    Word u = sampler.word(table.alphabet(), max_len);
    Word v = sampler.word(table.alphabet(), max_len);
    while (exponent_vector(u) == exponent_vector(v)) v = sampler.word(table.alphabet(), max_len);
    t.expect(!is_identity(table, u * invert(v), generic).is_identity,
             [&] { return str(u) + " = " + str(v) + " despite different exponents"; });
  }
  t.note("pairs", static_cast<std::int64_t>(pairs));
  return t.finish(std::to_string(pairs) + " pairs with different exponent vectors are distinct");
}

Report check_torsion_mixture(int arity, std::uint64_t probe_bound) {
  if (arity % 2 == 0) throw Error(ErrorCode::ArityMismatch, "torsion mixture is stated for odd d");
  const auto table = build_table(arity);
  const auto cat = catalog(arity);
  Tally t("torsion_mixture");
  const std::uint64_t expected = arity == 3 ? 3 : 2;
  const auto xi = order_probe(table, cat.at("xi_1"), 10);
  t.expect(xi == OrderResult::finite(expected), [&] {
    return std::string("xi_1 probe: ") + (xi.is_finite() ? "order " : "unknown beyond ") + std::to_string(xi.value);
  });
  const auto a = order_probe(table, gen(table.alphabet(), 1), probe_bound);
  t.expect(!a.is_finite(), [&] { return "a1 has order " + std::to_string(a.value); });
  t.note("xi_order", static_cast<std::int64_t>(xi.value));
  return t.finish("xi_1 has order " + std::to_string(xi.value) + ", a1 has no order <= " + std::to_string(probe_bound));
}

Report check_strategy_agreement(const RecursionTable& table, std::span<const Word> words) {
  if (table.arity() % 2 == 0) throw Error(ErrorCode::ArityMismatch, "the shortcut strategy needs odd d");
  Tally t("strategy_agreement");
  std::int64_t identities = 0;
  for (const Word& w : words) {
    const bool generic = is_identity(table, w, {Strategy::Generic}).is_identity;
    const bool shortcut = is_identity(table, w, {Strategy::OddShortcut}).is_identity;
    identities += generic ? 1 : 0;
    t.expect(generic == shortcut, [&] { return "strategies disagree on " + str(w); });
  }
  t.note("words", static_cast<std::int64_t>(words.size()));
  t.note("identities", identities);
  return t.finish(std::to_string(words.size()) + " words decided identically by both strategies");
}

namespace {

Report skipped(std::string id, const std::string& why) {
  Report r;
  r.check_id = std::move(id);
  r.status = Status::Skip;
  r.detail = why;
  return r;
}

// Largest level whose vertex count stays small enough for a quick orbit scan.
std::size_t transitivity_level(int d) {
  std::size_t level = 0;
  for (std::uint64_t n = static_cast<std::uint64_t>(d); n <= 1000 && level < 6; n *= static_cast<std::uint64_t>(d)) {
    ++level;
  }
  return level;
}

// Longest length whose reduced words number at most ~30000.
std::size_t exhaustive_length(int d) {
  std::size_t len = 0;
  std::uint64_t total = 0;
  std::uint64_t layer = static_cast<std::uint64_t>(2 * d);
  while (total + layer <= 30000) {
    total += layer;
    layer *= static_cast<std::uint64_t>(2 * d - 1);
    ++len;
  }
  return len;
}

}  // namespace

std::vector<Report> run_suite(const SuiteOptions& options) {
  const int d = options.arity;
  const auto table = build_table(d);
  const Alphabet A = table.alphabet();
  const bool odd = d % 2 == 1;
  const std::string odd_only = "stated for odd d only";
  const std::string three_only = "stated for d = 3 only";

  WordSampler sampler(options.seed);
  std::vector<Word> mixed = sampler.words(A, 500, options.max_len);
  for (int k = 0; k < 200; ++k) mixed.push_back(sampler.positive_word(A, options.max_len));

  std::vector<Report> reports;
  reports.push_back(check_generator_recursions(d));
  reports.push_back(check_section_tables(d));
  reports.push_back(check_exponent_laws(table, mixed));
  reports.back().seed = options.seed;
  reports.push_back(odd ? check_lemma_chains(d) : skipped("lemma_chains", odd_only));
  reports.push_back(check_noncontracting_witness(d, 128));
  reports.push_back(check_transitivity(table, transitivity_level(d)));
  reports.push_back(odd ? check_fractal_witnesses(d) : skipped("fractal_witnesses", odd_only));
  reports.push_back(odd ? check_branch_witnesses(d) : skipped("branch_witnesses", odd_only));
  reports.push_back(d == 3 ? check_free_semigroup(3, 6) : skipped("free_semigroup", three_only));
  for (std::size_t k = 1; k <= 2; ++k) {
    if (d == 3) {
      reports.push_back(check_hk_and_branch(k, sampler.words(A, 100, options.max_len), options.seed));
    } else {
      reports.push_back(skipped("hk_and_branch_k" + std::to_string(k), three_only));
    }
  }
  reports.push_back(check_parity_and_even_d(options.seed));
  if (odd) {
    auto words = all_reduced_words(A, exhaustive_length(d));
    const auto random = sampler.words(A, 1000, options.max_len);
    words.insert(words.end(), random.begin(), random.end());
    reports.push_back(check_relator_exponent_law(table, words));
    reports.back().seed = options.seed;
    reports.push_back(check_abelianization(table, options.seed, 1000, options.max_len));
    reports.push_back(check_torsion_mixture(d));
    reports.push_back(check_strategy_agreement(table, sampler.words(A, 2000, options.max_len)));
    reports.back().seed = options.seed;
  } else {
    for (const char* id : {"relator_exponent_law", "abelianization", "torsion_mixture", "strategy_agreement"}) {
      reports.push_back(skipped(id, odd_only));
    }
  }
  return reports;
}

}  // namespace arbora
