#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbora/tree_action.hpp"
#include "arbora/words.hpp"

namespace arbora {

/// a_i = (e, ..., a_i, a_{i+1}, ..., e)(i i+1), with a_i in slot i and
/// a_{i+1} in slot i+1, indices taken mod d. Throws ArityTooSmall.
RecursionTable build_table(int arity);

/// Named elements, each stored as an explicit reduced word.
class ElementCatalog {
 public:
  explicit ElementCatalog(Alphabet alphabet) : alphabet_(alphabet) {}

  Alphabet alphabet() const noexcept { return alphabet_; }

  /// Throws std::invalid_argument on a duplicate name or an empty word.
  void add(std::string name, Word word);

  bool contains(std::string_view name) const noexcept;
  /// Throws NameUnavailable.
  const Word& at(std::string_view name) const;

  const std::vector<std::pair<std::string, Word>>& entries() const noexcept { return entries_; }

 private:
  Alphabet alphabet_;
  std::vector<std::pair<std::string, Word>> entries_;
};

/// Every element the construction names, for arity d. Names use one-based
/// index suffixes:
///   g, h, h_i, g_i                     all d
///   hf, gf_i, s_i                      odd d (fractal witnesses)
///   beta_i, xi_i, gbr_i                odd d (branch witnesses)
///   rist_lift_ca, rist_lift_absq       d = 3
///   w4                                 d = 4
ElementCatalog catalog(int arity);

/// Generator a_i for one-based i, reduced mod d.
Word gen(Alphabet alphabet, int one_based_index);

/// a_{i1} a_{i2} ... for one-based indices reduced mod d.
Word product_of(Alphabet alphabet, std::initializer_list<int> one_based_indices);

}  // namespace arbora
