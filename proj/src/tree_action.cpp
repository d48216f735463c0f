#include "arbora/tree_action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arbora/error.hpp"

namespace arbora {

Vertex::Vertex(std::vector<int> symbols, int arity) : symbols_(std::move(symbols)) {
  for (int s : symbols_) {
    if (s < 0 || s >= arity) {
      throw Error(ErrorCode::BadVertex,
                  "vertex entry " + std::to_string(s + 1) + " outside 1.." + std::to_string(arity));
    }
  }
}

Vertex Vertex::repeated(int symbol, std::size_t level, int arity) {
  return Vertex(std::vector<int>(level, symbol), arity);
}

Vertex parse_vertex(std::string_view text, int arity) {
  std::vector<int> symbols;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::BadVertex, std::string("non-digit '") + c + "' in vertex");
    }
    symbols.push_back(c - '1');
  }
  return Vertex(std::move(symbols), arity);
}

std::string format_vertex(const Vertex& v) {
  std::string out;
  for (int s : v.symbols()) out.push_back(static_cast<char>('1' + s));
  return out;
}

RecursionTable::RecursionTable(Alphabet alphabet, std::vector<GeneratorRecursion> generators,
                               TableOrigin origin)
    : alphabet_(alphabet), generators_(std::move(generators)), origin_(origin) {
  const int d = alphabet.arity();
  if (static_cast<int>(generators_.size()) != d) {
    throw Error(ErrorCode::MalformedTable, "expected " + std::to_string(d) + " generator recursions, got " +
                                               std::to_string(generators_.size()));
  }
  for (const auto& g : generators_) {
    if (static_cast<int>(g.sections.size()) != d || g.perm.degree() != d) {
      throw Error(ErrorCode::MalformedTable, "recursion does not have arity " + std::to_string(d));
    }
    for (const auto& w : g.sections) {
      if (w.alphabet() != alphabet) {
        throw Error(ErrorCode::AlphabetMismatch, "section word over a different alphabet");
      }
    }
    inverse_perms_.push_back(g.perm.inverse());
  }
}

bool WreathRecursion::is_trivial() const noexcept {
  return perm.is_identity() &&
         std::all_of(sections.begin(), sections.end(), [](const Word& w) { return w.empty(); });
}

Permutation first_level_permutation(const RecursionTable& table, const Word& w) {
  std::vector<int> images(static_cast<std::size_t>(table.arity()));
  for (int x = 0; x < table.arity(); ++x) {
    int y = x;
    for (Letter l : w.letters()) {
      y = l.inverse ? table.inverse_perm(l.index)(y) : table.generator(l.index).perm(y);
    }
    images[static_cast<std::size_t>(x)] = y;
  }
  return Permutation::from_images(std::move(images));
}

namespace {

void act_letters(const RecursionTable& table, std::span<const Letter> letters, bool reversed,
                 std::span<int> path);

// Rewrites path in place: l(x v') = lambda_l(x) l|_x(v'), and for inverse
// letters l^-1(y v') = lambda^-1(y) (l|_{lambda^-1(y)})^-1(v').
void act_letter(const RecursionTable& table, Letter l, std::span<int> path) {
  if (path.empty()) return;
  const int x = path[0];
  const auto& gen = table.generator(l.index);
  if (!l.inverse) {
    path[0] = gen.perm(x);
    act_letters(table, gen.sections[static_cast<std::size_t>(x)].letters(), false, path.subspan(1));
  } else {
    const int pre = table.inverse_perm(l.index)(x);
    path[0] = pre;
    act_letters(table, gen.sections[static_cast<std::size_t>(pre)].letters(), true, path.subspan(1));
  }
}

void act_letters(const RecursionTable& table, std::span<const Letter> letters, bool reversed,
                 std::span<int> path) {
  if (path.empty()) return;
  if (!reversed) {
    for (Letter l : letters) act_letter(table, l, path);
  } else {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) act_letter(table, it->inverted(), path);
  }
}

void check_vertex(const RecursionTable& table, const Vertex& v) {
  for (int s : v.symbols()) {
    if (s < 0 || s >= table.arity()) {
      throw Error(ErrorCode::BadVertex,
                  "vertex entry " + std::to_string(s + 1) + " outside 1.." + std::to_string(table.arity()));
    }
  }
}

}  // namespace

Vertex act_vertex(const RecursionTable& table, const Word& w, const Vertex& v) {
  check_vertex(table, v);
  std::vector<int> path(v.symbols().begin(), v.symbols().end());
  act_letters(table, w.letters(), false, path);
  return Vertex(std::move(path), table.arity());
}

Word section_at(const RecursionTable& table, const Word& w, int symbol) {
  std::vector<Letter> raw;
  int x = symbol;
  for (Letter l : w.letters()) {
    const auto& gen = table.generator(l.index);
    if (!l.inverse) {
      const auto part = gen.sections[static_cast<std::size_t>(x)].letters();
      raw.insert(raw.end(), part.begin(), part.end());
      x = gen.perm(x);
    } else {
      x = table.inverse_perm(l.index)(x);
      const auto part = gen.sections[static_cast<std::size_t>(x)].letters();
      for (auto it = part.rbegin(); it != part.rend(); ++it) raw.push_back(it->inverted());
    }
  }
  return Word(table.alphabet(), raw);
}

Word section(const RecursionTable& table, const Word& w, const Vertex& v) {
  check_vertex(table, v);
  Word current = w;
  for (int s : v.symbols()) {
    if (current.empty()) break;
    current = section_at(table, current, s);
  }
  return current;
}

WreathRecursion wreath(const RecursionTable& table, const Word& w) {
  WreathRecursion out{{}, first_level_permutation(table, w)};
  out.sections.reserve(static_cast<std::size_t>(table.arity()));
  for (int x = 0; x < table.arity(); ++x) out.sections.push_back(section_at(table, w, x));
  return out;
}

bool LevelPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Vertex LevelPermutation::vertex(std::size_t index) const {
  std::vector<int> symbols(level_);
  for (std::size_t j = level_; j-- > 0;) {
    symbols[j] = static_cast<int>(index % static_cast<std::size_t>(arity_));
    index /= static_cast<std::size_t>(arity_);
  }
  return Vertex(std::move(symbols), arity_);
}

std::size_t LevelPermutation::index_of(const Vertex& v) const {
  std::size_t index = 0;
  for (int s : v.symbols()) index = index * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(s);
  return index;
}

std::uint64_t level_size(int arity, std::size_t level, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < level; ++i) {
    size *= static_cast<std::uint64_t>(arity);
    if (size > cap) {
      throw Error(ErrorCode::LevelTooLarge, std::to_string(arity) + "^" + std::to_string(level) +
                                                " vertices exceeds the cap of " + std::to_string(cap));
    }
  }
  if (size > cap) throw Error(ErrorCode::LevelTooLarge, "level exceeds the vertex cap");
  return size;
}

LevelPermutation level_permutation(const RecursionTable& table, const Word& w, std::size_t level,
                                   std::uint64_t cap) {
  const std::uint64_t n = level_size(table.arity(), level, cap);
  const auto d = static_cast<std::uint32_t>(table.arity());
  std::vector<std::uint32_t> images(static_cast<std::size_t>(n));
  std::vector<int> path(level);
  for (std::uint64_t index = 0; index < n; ++index) {
    std::uint64_t rest = index;
    for (std::size_t j = level; j-- > 0;) {
      path[j] = static_cast<int>(rest % d);
      rest /= d;
    }
    act_letters(table, w.letters(), false, path);
    std::uint32_t image = 0;
    for (int s : path) image = image * d + static_cast<std::uint32_t>(s);
    images[static_cast<std::size_t>(index)] = image;
  }
  return LevelPermutation(table.arity(), level, std::move(images));
}

namespace {

Portrait portrait_node(const RecursionTable& table, const Word& w, std::size_t depth) {
  Portrait node{first_level_permutation(table, w), std::nullopt, {}};
  if (depth == 0) {
    node.residual = w;
    return node;
  }
  node.children.reserve(static_cast<std::size_t>(table.arity()));
  for (int x = 0; x < table.arity(); ++x) {
    node.children.push_back(portrait_node(table, section_at(table, w, x), depth - 1));
  }
  return node;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_table(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::MalformedTable, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Portrait portrait(const RecursionTable& table, const Word& w, std::size_t depth, std::uint64_t cap) {
  level_size(table.arity(), depth, cap);
  return portrait_node(table, w, depth);
}

RecursionTable parse_table(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string name, sections, cycles;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto open = line.find('(', eq == std::string::npos ? 0 : eq);
    const auto close = open == std::string::npos ? open : line.find(')', open);
    if (eq == std::string::npos || open == std::string::npos || close == std::string::npos) {
      bad_table(number, "expected `<name> = (<w1>, ..., <wd>) (<cycles>)`");
    }
    lines.push_back({number, trim(std::string_view(line).substr(0, eq)),
                     line.substr(open + 1, close - open - 1), trim(std::string_view(line).substr(close + 1))});
  }
  if (static_cast<int>(lines.size()) < Alphabet::kMinArity) {
    throw Error(ErrorCode::MalformedTable, "a table needs at least " + std::to_string(Alphabet::kMinArity) +
                                               " generators, found " + std::to_string(lines.size()));
  }

  const Alphabet alphabet(static_cast<int>(lines.size()));
  const int d = alphabet.arity();
  std::vector<std::optional<GeneratorRecursion>> slots(static_cast<std::size_t>(d));
  for (const auto& line : lines) {
    Word name(alphabet);
    try {
      name = parse_word(line.name, alphabet);
    } catch (const Error& e) {
      bad_table(line.number, e.what());
    }
    if (name.size() != 1 || name[0].inverse) bad_table(line.number, "`" + line.name + "` is not a generator name");
    const int index = name[0].index;
    if (slots[static_cast<std::size_t>(index)]) bad_table(line.number, "generator `" + line.name + "` defined twice");

    std::vector<Word> sections;
    std::string_view rest = line.sections;
    while (true) {
      const auto comma = rest.find(',');
      const std::string token = trim(rest.substr(0, comma));
      try {
        sections.push_back(parse_word(token, alphabet));
      } catch (const Error& e) {
        bad_table(line.number, e.what());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (static_cast<int>(sections.size()) != d) {
      bad_table(line.number, "expected " + std::to_string(d) + " sections, got " + std::to_string(sections.size()));
    }
    try {
      slots[static_cast<std::size_t>(index)] =
          GeneratorRecursion{std::move(sections), parse_cycles(line.cycles, d)};
    } catch (const std::invalid_argument& e) {
      bad_table(line.number, e.what());
    }
  }

  std::vector<GeneratorRecursion> generators;
  for (auto& slot : slots) generators.push_back(std::move(*slot));
  return RecursionTable(alphabet, std::move(generators), TableOrigin::UserSupplied);
}

std::string format_table(const RecursionTable& table) {
  std::string out;
  for (int i = 0; i < table.arity(); ++i) {
    const auto& gen = table.generator(i);
    out += letter_name(table.alphabet(), Letter{i, false}) + " = (";
    for (std::size_t x = 0; x < gen.sections.size(); ++x) {
      if (x > 0) out += ", ";
      out += format_word(gen.sections[x]);
    }
    out += ") " + format_cycles(gen.perm) + "\n";
  }
  return out;
}

}  // namespace arbora
