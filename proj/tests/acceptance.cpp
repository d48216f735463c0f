// One line per acceptance criterion: "[PASS|FAIL] <n> <name>: <detail> (<ms> ms, limit <s> s)".
// Exit status is 0 iff every criterion passes, unless --expect-fail lists the
// criteria known to fail; then it is 0 iff exactly those fail.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "arbora/gd_family.hpp"
#include "arbora/verifier.hpp"
#include "arbora/word_problem.hpp"

using namespace arbora;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Accumulates sub-results; the first failing report or message becomes the detail.
class Collect {
 public:
  void report(const Report& r) {
    if (r.status != Status::Pass) fail(r.check_id + " " + std::string(to_string(r.status)) + ": " + r.detail);
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& text) { notes_ << (notes_.tellp() > 0 ? "; " : "") << text; }
  Outcome done() const { return {ok_, ok_ ? notes_.str() : first_}; }

 private:
  void fail(const std::string& what) {
    if (ok_) first_ = what;
    ok_ = false;
  }
  bool ok_ = true;
  std::string first_;
  std::ostringstream notes_;
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string count(const Report& r, const char* key) { return std::to_string(r.value(key).value_or(-1)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  app.add_option("--only", only, "run a subset")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "recursion fidelity", 1.0,
       [] {
         Collect c;
         for (int d : {3, 4, 5, 7}) c.report(check_generator_recursions(d));
         c.note("d = 3, 4, 5, 7 match the displayed recursions");
         return c.done();
       }},
      {2, "two-letter tables", 1.0,
       [] {
         Collect c;
         const auto r3 = check_section_tables(3);
         const auto r5 = check_section_tables(5);
         c.report(r3);
         c.report(r5);
         c.require(r3.value("table_entries_matched") == 9, "d=3 table entries matched " + count(r3, "table_entries_matched"));
         c.require(r5.value("max_inverse_pair_section_length") <= 1, "d=5 inverse pair section too long");
         c.note(count(r3, "table_entries_matched") + "/9 entries; max |a_i' a_j section| = " +
                count(r5, "max_inverse_pair_section_length"));
         return c.done();
       }},
      {3, "G_4 relator", 1.0,
       [] {
         Collect c;
         const Word w4 = catalog(4).at("w4");
         c.require(is_identity(build_table(4), w4).is_identity, "w4 is not the identity");
         c.require(exponent_vector(w4) == ExponentVector{{-1, 1, -1, 1}}, "w4 exponent vector differs");
         c.note("w4 = e with exponent vector (-1,1,-1,1)");
         return c.done();
       }},
      {4, "odd-d exponent law", 300.0,
       [] {
         Collect c;
         const auto exhaustive = all_reduced_words(Alphabet(3), 6);
         const auto r3 = check_relator_exponent_law(build_table(3), exhaustive);
         WordSampler sampler(0);
         const auto random = sampler.words(Alphabet(5), 10'000, 10);
         const auto r5 = check_relator_exponent_law(build_table(5), random);
         c.report(r3);
         c.report(r5);
         c.note("d=3: " + count(r3, "words") + " words, " + count(r3, "relators") + " relators; d=5: " +
                count(r5, "words") + " words, " + count(r5, "relators") + " relators [seed 0]");
         return c.done();
       }},
      {5, "lemma chains", 60.0,
       [] {
         Collect c;
         for (int d : {3, 5, 7}) c.report(check_lemma_chains(d));
         c.note("d = 3, 5, 7");
         return c.done();
       }},
      {6, "fractal witnesses", 60.0,
       [] {
         Collect c;
         for (int d : {3, 5, 7}) {
           const auto r = check_fractal_witnesses(d);
           c.report(r);
           c.require(r.value("generators_recovered") == d, "d=" + std::to_string(d) + " recovered " + count(r, "generators_recovered"));
         }
         c.note("all generators recovered for d = 3, 5, 7");
         return c.done();
       }},
      {7, "branch witnesses", 120.0,
       [] {
         Collect c;
         for (int d : {3, 5, 7}) c.report(check_branch_witnesses(d));
         c.note("xi display and final lifts hold for d = 3, 5, 7");
         return c.done();
       }},
      {8, "free semigroup", 600.0,
       [] {
         Collect c;
         const auto r = check_free_semigroup(3, 6);
         c.report(r);
         c.require(r.value("distinct") == 3 + 9 + 27 + 81 + 243 + 729, "distinct count " + count(r, "distinct"));
         c.note(count(r, "distinct") + " distinct of " + count(r, "words") + " words, " + count(r, "pairs_searched") +
                " pairs searched");
         return c.done();
       }},
      {9, "transitivity", 60.0,
       [] {
         Collect c;
         std::string sizes;
         for (auto [d, top] : {std::pair{3, 4}, std::pair{5, 2}}) {
           const auto t = build_table(d);
           for (std::size_t k = 0; k <= static_cast<std::size_t>(top); ++k) {
             const auto r = check_transitivity(t, k);
             c.report(r);
             sizes += (sizes.empty() ? "" : " ") + count(r, "orbit_size");
           }
         }
         c.note("orbit sizes " + sizes);
         return c.done();
       }},
      {10, "H_k / Rist / branch", 60.0,
       [] {
         Collect c;
         for (std::size_t k : {1, 2}) {
           WordSampler sampler(k);
           const auto sample = sampler.words(Alphabet(3), 100, 10);
           const auto r = check_hk_and_branch(k, sample, k);
           c.report(r);
           if (k == 1) {
             c.require(r.value("coset_tuples") <= r.value("index_bound"), "more coset tuples than the index bound");
             c.note("k=1: " + count(r, "coset_tuples") + " coset tuples within bound " + count(r, "index_bound"));
           }
         }
         return c.done();
       }},
      {11, "orders", 120.0,
       [] {
         Collect c;
         const auto t = build_table(3);
         const Alphabet A(3);
         c.require(order_probe(t, catalog(3).at("xi_1"), 10) == OrderResult::finite(3), "xi does not have order 3");
         for (const char* w : {"a", "a b c", "a b c b"}) {
           c.require(order_probe(t, parse_word(w, A), 128) == OrderResult::unknown_beyond(128),
                     std::string(w) + " has finite order <= 128");
         }
         c.note("xi of order 3; a, abc, abcb unknown beyond 128");
         return c.done();
       }},
      {12, "parity", 60.0,
       [] {
         Collect c;
         const auto r = check_parity_and_even_d(0, 1000);
         c.report(r);
         c.note(count(r, "stabilizer_samples") + " St(1) samples of even length [seed 0]");
         return c.done();
       }},
      {13, "strategy agreement", 300.0,
       [] {
         Collect c;
         WordSampler sampler(0);
         const auto r = check_strategy_agreement(build_table(3), sampler.words(Alphabet(3), 10'000, 10));
         c.report(r);
         c.note(count(r, "words") + " words, " + count(r, "identities") + " identities [seed 0]");
         return c.done();
       }},
  };

  std::set<int> failed;
  for (const auto& criterion : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), criterion.number) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > criterion.limit_seconds * 1000.0) {
      outcome.ok = false;
      outcome.detail = "time limit exceeded; " + outcome.detail;
    }
    if (!outcome.ok) failed.insert(criterion.number);
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << criterion.number << " " << criterion.name << ": "
              << outcome.detail << " (" << static_cast<long long>(ms) << " ms, limit " << criterion.limit_seconds
              << " s)" << std::endl;
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (expected.empty()) return failed.empty() ? 0 : 1;
  std::set<int> relevant;
  for (int n : expected) {
    if (only.empty() || std::find(only.begin(), only.end(), n) != only.end()) relevant.insert(n);
  }
  std::cout << "expected failures: " << expected.size() << ", observed: " << failed.size() << std::endl;
  return failed == relevant ? 0 : 1;
}
