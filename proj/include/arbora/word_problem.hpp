#pragma once

#include <cstdint>
#include <string_view>

#include "arbora/tree_action.hpp"
#include "arbora/words.hpp"

namespace arbora {

enum class Strategy {
  Auto,         // OddShortcut for odd d, Generic otherwise
  Generic,      // no exponent-sum pruning
  OddShortcut,  // prune on nonzero exponent vector; odd d only
};

Strategy parse_strategy(std::string_view name);  // "auto" | "generic" | "odd-shortcut"
std::string_view to_string(Strategy s) noexcept;

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::uint32_t kDefaultDepthLimit = 10'000;

struct SolverOptions {
  Strategy strategy = Strategy::Auto;
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::uint32_t max_depth = kDefaultDepthLimit;
};

/// Outcome of one identity test. Counters are upper bounds: memoized
/// subproblems are counted once per visit.
struct Decision {
  bool is_identity = false;
  std::uint64_t nodes_explored = 0;
  std::uint32_t max_depth = 0;
  std::uint64_t shortcut_hits = 0;
};

/// Decides w = e by branching on wreath recursions:
///   1. the empty word is e;
///   2. lambda_w != id  =>  w != e;
///   3. (odd shortcut) nonzero exponent vector  =>  w != e;
///   4. (G_d tables) a nonempty word over A or over A^-1  =>  w != e;
///   5. otherwise conjugate w to end in p^-1 q and require every section to
///      be e, visiting slots 1..d depth first.
/// For G_d tables each section in step 5 is strictly shorter, so the search
/// terminates. For user tables step 4 is skipped and a section revisiting a
/// word still on the search path counts as e; termination is not
/// guaranteed there and the node budget applies.
/// Throws StrategyMismatch (odd shortcut with even d or a user table) and
/// NodeBudgetExceeded.
Decision is_identity(const RecursionTable& table, const Word& w, const SolverOptions& options = {});

/// u = v iff u v^-1 = e.
bool are_equal(const RecursionTable& table, const Word& u, const Word& v, const SolverOptions& options = {});

/// True iff w fixes every vertex of level k. Throws LevelTooLarge when d^k
/// exceeds `cap`.
bool in_level_stabilizer(const RecursionTable& table, const Word& w, std::size_t level,
                         std::uint64_t cap = kDefaultVertexCap);

struct OrderResult {
  enum class Kind { Finite, UnknownBeyond };
  Kind kind;
  std::uint64_t value;  // the order, or the probe bound

  static OrderResult finite(std::uint64_t n) { return {Kind::Finite, n}; }
  static OrderResult unknown_beyond(std::uint64_t bound) { return {Kind::UnknownBeyond, bound}; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

/// Least n <= bound with w^n = e, else UnknownBeyond(bound).
OrderResult order_probe(const RecursionTable& table, const Word& w, std::uint64_t bound,
                        const SolverOptions& options = {});

}  // namespace arbora
