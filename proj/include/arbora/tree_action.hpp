#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbora/permutation.hpp"
#include "arbora/words.hpp"

namespace arbora {

/// Default bound on d^k for anything that enumerates a whole tree level.
inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

/// A vertex of the d-regular rooted tree, stored as zero-based symbols.
/// The root is the empty path.
class Vertex {
 public:
  Vertex() = default;
  /// Throws BadVertex if a symbol lies outside 0..arity-1.
  Vertex(std::vector<int> symbols, int arity);

  static Vertex repeated(int symbol, std::size_t level, int arity);

  std::span<const int> symbols() const noexcept { return symbols_; }
  std::size_t level() const noexcept { return symbols_.size(); }
  bool is_root() const noexcept { return symbols_.empty(); }
  int operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> symbols_;
};

/// Digit string over 1..d, e.g. "112"; the empty string is the root.
Vertex parse_vertex(std::string_view text, int arity);
std::string format_vertex(const Vertex& v);

/// g = (g|_1, ..., g|_d) lambda_g for a single generator.
struct GeneratorRecursion {
  std::vector<Word> sections;
  Permutation perm;

  friend bool operator==(const GeneratorRecursion&, const GeneratorRecursion&) = default;
};

enum class TableOrigin { GdFamily, UserSupplied };

/// Wreath recursions of all generators; defines a self-similar group.
class RecursionTable {
 public:
  /// Validates that there is one recursion per generator, each with d
  /// sections over `alphabet` and a permutation of degree d.
  RecursionTable(Alphabet alphabet, std::vector<GeneratorRecursion> generators,
                 TableOrigin origin = TableOrigin::UserSupplied);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int arity() const noexcept { return alphabet_.arity(); }
  TableOrigin origin() const noexcept { return origin_; }

  const GeneratorRecursion& generator(int index) const {
    return generators_[static_cast<std::size_t>(index)];
  }
  const Permutation& inverse_perm(int index) const {
    return inverse_perms_[static_cast<std::size_t>(index)];
  }

  friend bool operator==(const RecursionTable& x, const RecursionTable& y) {
    return x.alphabet_ == y.alphabet_ && x.generators_ == y.generators_;
  }

 private:
  Alphabet alphabet_;
  std::vector<GeneratorRecursion> generators_;
  std::vector<Permutation> inverse_perms_;
  TableOrigin origin_;
};

/// psi(w) = (w|_1, ..., w|_d) lambda_w for an arbitrary word.
struct WreathRecursion {
  std::vector<Word> sections;
  Permutation perm;

  bool is_trivial() const noexcept;
  friend bool operator==(const WreathRecursion&, const WreathRecursion&) = default;
};

/// Action of w on level one. Letters act first to last.
Permutation first_level_permutation(const RecursionTable& table, const Word& w);

/// w(v). Throws BadVertex.
Vertex act_vertex(const RecursionTable& table, const Word& w, const Vertex& v);

/// w|_x for a first-level symbol x (zero-based).
Word section_at(const RecursionTable& table, const Word& w, int symbol);

/// w|_v, folding one level at a time. Throws BadVertex.
Word section(const RecursionTable& table, const Word& w, const Vertex& v);

WreathRecursion wreath(const RecursionTable& table, const Word& w);

/// The action of a word on the d^k vertices of level k. Vertices are
/// indexed in lexicographic order (1 < 2 < ... < d), index 0 being 1...1.
class LevelPermutation {
 public:
  LevelPermutation(int arity, std::size_t level, std::vector<std::uint32_t> images)
      : arity_(arity), level_(level), images_(std::move(images)) {}

  int arity() const noexcept { return arity_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t image(std::size_t index) const { return images_[index]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Vertex vertex(std::size_t index) const;
  std::size_t index_of(const Vertex& v) const;

 private:
  int arity_;
  std::size_t level_;
  std::vector<std::uint32_t> images_;
};

/// d^k, or throws LevelTooLarge when it exceeds `cap`.
std::uint64_t level_size(int arity, std::size_t level, std::uint64_t cap = kDefaultVertexCap);

LevelPermutation level_permutation(const RecursionTable& table, const Word& w, std::size_t level,
                                   std::uint64_t cap = kDefaultVertexCap);

/// Finite-depth portrait: each node carries lambda of the section at that
/// vertex; nodes at the cut-off depth also carry the section itself.
struct Portrait {
  Permutation perm;
  std::optional<Word> residual;
  std::vector<Portrait> children;
};

Portrait portrait(const RecursionTable& table, const Word& w, std::size_t depth,
                  std::uint64_t cap = kDefaultVertexCap);

/// One line per generator: `<name> = (<w1>, ..., <wd>) (<cycles>)`.
/// Blank lines and `#` comments are ignored. Throws MalformedTable.
RecursionTable parse_table(std::string_view text);
std::string format_table(const RecursionTable& table);

}  // namespace arbora
