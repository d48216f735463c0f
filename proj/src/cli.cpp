#include "arbora/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arbora/error.hpp"
#include "arbora/gd_family.hpp"
#include "arbora/verifier.hpp"
#include "arbora/word_problem.hpp"

namespace arbora {

namespace {

struct Config {
  int d = 3;
  std::string table_path;
  std::string strategy = "auto";
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::size_t max_len = 10;
  std::size_t depth = 2;
  std::size_t level = 1;
  std::uint64_t seed = 0;
  std::uint64_t bound = 128;
  std::string name;
  std::string words_file;
  std::string word;
  std::string vertex;
  bool list = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RecursionTable load_table(const Config& c, std::ostream& err, bool warn) {
  if (c.table_path.empty()) return build_table(c.d);
  std::ifstream in(c.table_path);
  if (!in) throw UsageError("cannot read table file " + c.table_path);
  std::stringstream text;
  text << in.rdbuf();
  auto table = parse_table(text.str());
  if (warn) {
    err << "warning: identity is only guaranteed to terminate for built-in G_d tables; "
           "the node budget bounds this search\n";
  }
  return table;
}

std::vector<Word> read_words(const Config& c, Alphabet A) {
  std::vector<Word> words;
  if (!c.words_file.empty()) {
    std::ifstream in(c.words_file);
    if (!in) throw UsageError("cannot read words file " + c.words_file);
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      words.push_back(parse_word(line, A));
    }
  }
  if (!c.word.empty() || c.words_file.empty()) words.push_back(parse_word(c.word, A));
  return words;
}

SolverOptions solver(const Config& c) {
  SolverOptions o;
  o.strategy = parse_strategy(c.strategy);
  o.max_nodes = c.max_nodes;
  return o;
}

void print_portrait(std::ostream& out, const Portrait& p, const std::string& path, std::size_t indent) {
  out << std::string(2 * indent, ' ') << (path.empty() ? "root" : path) << ": " << format_cycles(p.perm);
  if (p.residual) out << "  | " << format_word(*p.residual);
  out << '\n';
  for (std::size_t x = 0; x < p.children.size(); ++x) {
    print_portrait(out, p.children[x], path + std::to_string(x + 1), indent + 1);
  }
}

int print_reports(std::ostream& out, const std::vector<Report>& reports) {
  bool failed = false;
  for (const auto& r : reports) {
    out << format_report_line(r) << '\n';
    failed = failed || r.status == Status::Fail;
  }
  return failed ? 1 : 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar groups G_d acting on the d-regular rooted tree", "arbora"};
  app.require_subcommand(1);
  Config c;

  auto add_d = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "arity, 3..9")->check(CLI::Range(3, 9));
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--table", c.table_path, "recursion table file (overrides --d)")->check(CLI::ExistingFile);
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--strategy", c.strategy, "auto | generic | odd-shortcut");
    sub->add_option("--max-nodes", c.max_nodes, "search node budget")
        ->envname("ARBORA_MAX_NODES")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "image of a vertex under a word");
  add_d(eval);
  add_table(eval);
  eval->add_option("word", c.word)->required();
  eval->add_option("vertex", c.vertex, "digits over 1..d")->required();

  auto* sec = app.add_subcommand("section", "section of a word at a vertex");
  add_d(sec);
  add_table(sec);
  sec->add_option("word", c.word)->required();
  sec->add_option("vertex", c.vertex)->required();

  auto* ident = app.add_subcommand("identity", "decide whether a word is the identity");
  add_d(ident);
  add_table(ident);
  add_solver(ident);
  ident->add_option("word", c.word);
  ident->add_option("--words-file", c.words_file, "one word per line, # comments");

  auto* expsum = app.add_subcommand("expsum", "exponent vector of a word");
  add_d(expsum);
  expsum->add_option("word", c.word);
  expsum->add_option("--words-file", c.words_file);

  auto* order = app.add_subcommand("order-probe", "least n <= bound with w^n = e");
  add_d(order);
  add_table(order);
  add_solver(order);
  order->add_option("word", c.word)->required();
  order->add_option("--bound", c.bound, "probe bound")->check(CLI::PositiveNumber);

  auto* orbit = app.add_subcommand("orbit", "orbit of a vertex under the generators");
  add_d(orbit);
  add_table(orbit);
  orbit->add_option("vertex", c.vertex, "digits over 1..d")->required();
  orbit->add_flag("--list", c.list, "print the orbit, one vertex per line");

  auto* port = app.add_subcommand("portrait", "portrait of a word to a given depth");
  add_d(port);
  add_table(port);
  port->add_option("word", c.word)->required();
  port->add_option("--depth", c.depth, "cut-off depth");

  auto* cat = app.add_subcommand("catalog", "named elements of G_d");
  add_d(cat);
  cat->add_option("--name", c.name, "print one entry only");

  auto* free = app.add_subcommand("free-semigroup", "pairwise distinctness of positive words");
  add_d(free);
  free->add_option("--max-len", c.max_len, "longest word")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-paper", "run every check for one arity");
  add_d(verify);
  verify->add_option("--seed", c.seed);
  verify->add_option("--max-len", c.max_len, "longest random word")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "arbora: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed() || sec->parsed()) {
      const auto table = load_table(c, err, false);
      const Word w = parse_word(c.word, table.alphabet());
      const Vertex v = parse_vertex(c.vertex, table.arity());
      if (eval->parsed()) {
        out << format_vertex(act_vertex(table, w, v)) << '\n';
      } else {
        out << format_word(section(table, w, v)) << '\n';
      }
    } else if (ident->parsed()) {
      const auto table = load_table(c, err, true);
      const auto words = read_words(c, table.alphabet());
      const auto options = solver(c);
      for (const Word& w : words) {
        const auto decision = is_identity(table, w, options);
        const char* verdict = decision.is_identity ? "identity" : "nonidentity";
        const std::string stats =
            "nodes=" + std::to_string(decision.nodes_explored) + " depth=" + std::to_string(decision.max_depth);
        if (words.size() == 1) {
          out << verdict << '\n' << stats << '\n';
        } else {
          out << format_word(w) << '\t' << verdict << '\t' << stats << '\n';
        }
      }
    } else if (expsum->parsed()) {
      const Alphabet A(c.d);
      const auto words = read_words(c, A);
      for (const Word& w : words) {
        const auto ev = exponent_vector(w);
        if (words.size() > 1) out << format_word(w) << '\t';
        for (std::size_t i = 0; i < ev.size(); ++i) out << (i ? " " : "") << ev[i];
        out << '\n';
      }
    } else if (order->parsed()) {
      const auto table = load_table(c, err, true);
      const auto result = order_probe(table, parse_word(c.word, table.alphabet()), c.bound, solver(c));
      out << (result.is_finite() ? "finite " : "unknown-beyond ") << result.value << '\n';
    } else if (orbit->parsed()) {
      const auto table = load_table(c, err, false);
      const Vertex start = parse_vertex(c.vertex, table.arity());
      std::vector<Vertex> seen{start};
      for (std::size_t k = 0; k < seen.size(); ++k) {
        for (int i = 0; i < table.arity(); ++i) {
          for (bool inv : {false, true}) {
            const Word g(table.alphabet(), std::vector<Letter>{Letter{i, inv}});
            Vertex u = act_vertex(table, g, seen[k]);
            if (std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(std::move(u));
          }
        }
      }
      std::sort(seen.begin(), seen.end(), [](const Vertex& x, const Vertex& y) {
        return std::lexicographical_compare(x.symbols().begin(), x.symbols().end(), y.symbols().begin(),
                                            y.symbols().end());
      });
      out << "orbit_size=" << seen.size() << '\n';
      if (c.list) {
        for (const auto& v : seen) out << format_vertex(v) << '\n';
      }
    } else if (port->parsed()) {
      const auto table = load_table(c, err, false);
      print_portrait(out, portrait(table, parse_word(c.word, table.alphabet()), c.depth), "", 0);
    } else if (cat->parsed()) {
      const auto entries = catalog(c.d);
      if (!c.name.empty()) {
        out << format_word(entries.at(c.name)) << '\n';
      } else {
        for (const auto& [name, w] : entries.entries()) out << name << " = " << format_word(w) << '\n';
      }
    } else if (free->parsed()) {
      return print_reports(out, {check_free_semigroup(c.d, c.max_len)});
    } else if (verify->parsed()) {
      return print_reports(out, run_suite({c.d, c.seed, c.max_len}));
    }
  } catch (const Error& e) {
    err << "arbora: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "arbora: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "arbora: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace arbora
