#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arbora {

/// Bijection of {0, ..., d-1}. Products compose left to right: (p * q)(x) =
/// q(p(x)), so a word's letter permutations multiply in reading order.
class Permutation {
 public:
  static Permutation identity(int degree);
  static Permutation transposition(int degree, int x, int y);
  /// Throws std::invalid_argument unless `images` is a bijection.
  static Permutation from_images(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Apply *this, then `next`.
  Permutation then(const Permutation& next) const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q) { return p.then(q); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// One-based disjoint cycle notation, each cycle starting at its least point,
/// fixed points omitted; the identity is "()".
std::string format_cycles(const Permutation& p);

/// Parses a product of one-based cycles, e.g. "(1 3 2)" or "(1 3)(2 1)",
/// composed left to right. Entries may be space separated or, for d <= 9,
/// written as contiguous digits. "()" and "" are the identity.
Permutation parse_cycles(std::string_view text, int degree);

}  // namespace arbora
