#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arbora/tree_action.hpp"
#include "arbora/words.hpp"

namespace arbora {

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s) noexcept;

/// Result of one verification check. A failing report names a concrete
/// counterexample in `detail`.
struct Report {
  std::string check_id;
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::pair<std::string, std::int64_t>> payload;
  std::optional<std::uint64_t> seed;

  bool passed() const noexcept { return status == Status::Pass; }
  std::optional<std::int64_t> value(std::string_view key) const;
};

/// `<check_id>\t<PASS|FAIL|SKIP>\t<detail>`
std::string format_report_line(const Report& r);

/// Seeded source of random words: length uniform on [1, max_len], letters
/// uniform over the 2d signed generators, then freely reduced.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : engine_(seed) {}

  Word word(Alphabet alphabet, std::size_t max_len);
  Word positive_word(Alphabet alphabet, std::size_t max_len);
  std::vector<Word> words(Alphabet alphabet, std::size_t count, std::size_t max_len);

 private:
  std::mt19937_64 engine_;
};

/// Every reduced word of length 1..max_len, shortlex order.
std::vector<Word> all_reduced_words(Alphabet alphabet, std::size_t max_len);
/// Every nonempty word over A of length <= max_len, shortlex order.
std::vector<Word> all_positive_words(Alphabet alphabet, std::size_t max_len);

Report check_generator_recursions(int arity);
Report check_exponent_laws(const RecursionTable& table, std::span<const Word> sample);
Report check_section_tables(int arity);
Report check_lemma_chains(int arity);
Report check_noncontracting_witness(int arity, std::uint64_t probe_bound);
Report check_transitivity(const RecursionTable& table, std::size_t level,
                          std::uint64_t cap = kDefaultVertexCap);
Report check_fractal_witnesses(int arity);
Report check_branch_witnesses(int arity);

inline constexpr std::uint64_t kDefaultPairBudget = 5'000'000;
/// Throws BudgetExceeded when more than `pair_budget` pairs need a search.
Report check_free_semigroup(int arity, std::size_t max_len, std::uint64_t pair_budget = kDefaultPairBudget);

/// d = 3 only (throws ArityMismatch otherwise); `level` in {1, 2}.
Report check_hk_and_branch(std::size_t level, std::span<const Word> sample, std::uint64_t seed);
Report check_parity_and_even_d(std::uint64_t seed, std::size_t stabilizer_samples = 1000);

/// Odd d: every word of `words` that is e has zero exponent vector.
Report check_relator_exponent_law(const RecursionTable& table, std::span<const Word> words);
/// Odd d: random pairs with different exponent vectors are different elements.
Report check_abelianization(const RecursionTable& table, std::uint64_t seed, std::size_t pairs,
                            std::size_t max_len);
/// Odd d: xi_1 has finite order (3 for d = 3, 2 otherwise) while a_1 does not
/// within `probe_bound`.
Report check_torsion_mixture(int arity, std::uint64_t probe_bound = 128);
/// Odd d: generic and odd-shortcut decisions coincide on every word.
Report check_strategy_agreement(const RecursionTable& table, std::span<const Word> words);

struct SuiteOptions {
  int arity = 3;
  std::uint64_t seed = 0;
  std::size_t max_len = 10;
};

/// The full check list for one arity, in a fixed order. Checks that do not
/// apply to this arity are present with status Skip.
std::vector<Report> run_suite(const SuiteOptions& options);

}  // namespace arbora
