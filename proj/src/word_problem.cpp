#include "arbora/word_problem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "arbora/error.hpp"

namespace arbora {

Strategy parse_strategy(std::string_view name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "generic") return Strategy::Generic;
  if (name == "odd-shortcut" || name == "odd_shortcut") return Strategy::OddShortcut;
  throw std::invalid_argument("unknown strategy `" + std::string(name) + "`");
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Generic: return "generic";
    case Strategy::OddShortcut: return "odd-shortcut";
  }
  return "auto";
}

namespace {

std::string key_of(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (Letter l : w.letters()) key.push_back(static_cast<char>(l.index * 2 + (l.inverse ? 1 : 0)));
  return key;
}

class IdentitySearch {
 public:
  IdentitySearch(const RecursionTable& table, const SolverOptions& options, bool exponent_shortcut)
      : table_(table),
        options_(options),
        exponent_shortcut_(exponent_shortcut),
        family_(table.origin() == TableOrigin::GdFamily) {}

  bool visit(const Word& w, std::uint32_t depth) {
    if (++stats_.nodes_explored > options_.max_nodes) {
      throw Error(ErrorCode::NodeBudgetExceeded,
                  "more than " + std::to_string(options_.max_nodes) + " nodes explored");
    }
    if (depth > options_.max_depth) {
      throw Error(ErrorCode::NodeBudgetExceeded, "recursion deeper than " + std::to_string(options_.max_depth));
    }
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (w.empty()) return true;

    std::string key = key_of(w);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (on_path_.count(key) != 0) return true;

    const bool result = decide(w, depth, key);
    memo_.emplace(std::move(key), result);
    return result;
  }

  Decision finish(bool result) {
    stats_.is_identity = result;
    return stats_;
  }

 private:
  bool decide(const Word& w, std::uint32_t depth, const std::string& key) {
    if (!first_level_permutation(table_, w).is_identity()) return false;
    if (exponent_shortcut_ && !exponent_vector(w).is_zero()) {
      ++stats_.shortcut_hits;
      return false;
    }
    // A nonempty word over A (or its inverse) is never e in G_d.
    if (family_ && (w.is_positive() || w.is_negative())) return false;

    auto normal = cyclic_normalize(w);
    if (std::holds_alternative<SignPure>(normal)) {
      if (family_) return false;
      normal = w;
    }
    const Word& u = std::get<Word>(normal);

    on_path_.insert(key);
    bool result = true;
    for (int x = 0; x < table_.arity() && result; ++x) {
      const Word s = section_at(table_, u, x);
      if (!s.empty()) result = visit(s, depth + 1);
    }
    on_path_.erase(key);
    return result;
  }

  const RecursionTable& table_;
  const SolverOptions& options_;
  bool exponent_shortcut_;
  bool family_;
  Decision stats_;
  std::unordered_map<std::string, bool> memo_;
  std::unordered_set<std::string> on_path_;
};

}  // namespace

Decision is_identity(const RecursionTable& table, const Word& w, const SolverOptions& options) {
  if (w.alphabet() != table.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch, "word and table have different arities");
  }
  const bool odd = table.arity() % 2 == 1;
  const bool family = table.origin() == TableOrigin::GdFamily;
  bool shortcut = false;
  switch (options.strategy) {
    case Strategy::Auto: shortcut = odd && family; break;
    case Strategy::Generic: shortcut = false; break;
    case Strategy::OddShortcut:
      if (!odd || !family) {
        throw Error(ErrorCode::StrategyMismatch,
                    "the exponent-sum shortcut needs a G_d table with odd d (d=" + std::to_string(table.arity()) + ")");
      }
      shortcut = true;
      break;
  }
  IdentitySearch search(table, options, shortcut);
  const bool result = search.visit(w, 0);
  return search.finish(result);
}

bool are_equal(const RecursionTable& table, const Word& u, const Word& v, const SolverOptions& options) {
  return is_identity(table, u * invert(v), options).is_identity;
}

namespace {

bool stabilizes(const RecursionTable& table, const Word& w, std::size_t level) {
  if (level == 0 || w.empty()) return true;
  if (!first_level_permutation(table, w).is_identity()) return false;
  for (int x = 0; x < table.arity(); ++x) {
    if (!stabilizes(table, section_at(table, w, x), level - 1)) return false;
  }
  return true;
}

}  // namespace

bool in_level_stabilizer(const RecursionTable& table, const Word& w, std::size_t level, std::uint64_t cap) {
  level_size(table.arity(), level, cap);
  return stabilizes(table, w, level);
}

OrderResult order_probe(const RecursionTable& table, const Word& w, std::uint64_t bound,
                        const SolverOptions& options) {
  Word p(w.alphabet());
  for (std::uint64_t n = 1; n <= bound; ++n) {
    p = p * w;
    if (is_identity(table, p, options).is_identity) return OrderResult::finite(n);
  }
  return OrderResult::unknown_beyond(bound);
}

}  // namespace arbora
