#include "arbora/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace arbora {

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int x, int y) {
  auto p = identity(degree);
  std::swap(p.images_[static_cast<std::size_t>(x)], p.images_[static_cast<std::size_t>(y)]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int y : images) {
    if (y < 0 || static_cast<std::size_t>(y) >= images.size() || seen[static_cast<std::size_t>(y)]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[static_cast<std::size_t>(y)] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = next(images_[x]);
  return Permutation(std::move(out));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out.push_back('(');
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      if (x != start) out.push_back(' ');
      out += std::to_string(x + 1);
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, int degree) {
  auto result = Permutation::identity(degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation \"" + std::string(text) + "\": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  for (skip_space(); pos < text.size(); skip_space()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unterminated cycle");
    const std::string_view body = text.substr(pos, close - pos);
    pos = close + 1;

    std::vector<int> cycle;
    const bool spaced = body.find_first_of(" \t,") != std::string_view::npos;
    std::size_t i = 0;
    while (i < body.size()) {
      const auto ch = static_cast<unsigned char>(body[i]);
      if (std::isspace(ch) || body[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(ch)) fail("non-digit in cycle");
      int value = 0;
      if (spaced) {
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
          value = value * 10 + (body[i++] - '0');
        }
      } else {
        value = body[i++] - '0';
      }
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " out of range");
      cycle.push_back(value - 1);
    }
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated point in a cycle");
    if (cycle.size() < 2) continue;

    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    result = result * Permutation::from_images(std::move(images));
  }
  return result;
}

}  // namespace arbora
