// Command-line surface for the zimin library: pattern printing, word checks,
// table generation and export, theorem verification, avoidance search.
//
// Exit codes: 0 success / encounter, 1 negative result (word avoids, no
// collapse within the limit, verification failed), 2 usage or range error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "zimin/instances.hpp"
#include "zimin/match.hpp"
#include "zimin/reconcile.hpp"
#include "zimin/selfref.hpp"
#include "zimin/table.hpp"
#include "zimin/table_io.hpp"

namespace {

using namespace zimin;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string images_line(const Witness& wit) {
  std::string out;
  for (std::size_t v = 0; v < wit.images.size(); ++v) {
    if (v) out += ' ';
    out += "x" + std::to_string(v) + "=";
    for (Symbol s : wit.images[v]) out += symbol_to_digit(s);
  }
  return out;
}

// q^m stays below 2^63; names the flags when it does not.
void check_table_shape(unsigned q, unsigned m) {
  if (m > kMaxWordLength || !checked_pow(q, m)) {
    throw CLI::ValidationError(
        "--m", "table shape out of range: " + std::to_string(q) + "^" +
                   std::to_string(m) + " does not fit the 63-bit index space");
  }
}

int run_print(unsigned n) {
  std::cout << zimin_pattern(n).str() << "\n";
  return kExitSuccess;
}

int run_check(const std::string& word_str, unsigned q, std::optional<unsigned> n,
              std::optional<std::string> pattern_str, bool with_density) {
  const Alphabet a(q);
  const Word word = Word::parse(a, word_str);
  Pattern pattern = n ? zimin_pattern(*n) : Pattern::parse(*pattern_str);
  std::cout << "word: " << word.str() << " (q=" << q << ", length "
            << word.size() << ")\n";
  std::cout << "pattern: " << pattern.str();
  if (n) std::cout << " (zimin n=" << *n << ")";
  std::cout << "\n";

  auto whole = find_witness(word, pattern);
  std::cout << "instance: " << (whole ? "yes" : "no") << "\n";
  if (whole) std::cout << "witness: " << images_line(*whole) << "\n";

  bool enc = whole.has_value();
  if (!enc) {
    auto occ = find_encounter(word, pattern);
    enc = occ.has_value();
    std::cout << "encounters: " << (enc ? "yes" : "no") << "\n";
    if (occ) {
      std::cout << "occurrence: [" << occ->start << ", " << occ->end << "] = ";
      for (std::size_t i = occ->start; i <= occ->end; ++i) {
        std::cout << symbol_to_digit(word[i]);
      }
      std::cout << ", witness: " << images_line(occ->witness) << "\n";
    }
  } else {
    std::cout << "encounters: yes\n";
  }
  if (with_density) {
    std::cout << "density: " << density(word, pattern) << "\n";
  }
  if (pattern_str) {
    if (pattern.variable_count() <= kUnavoidableVariableGuard) {
      std::cout << "unavoidable: " << (is_unavoidable(pattern) ? "yes" : "no")
                << "\n";
    } else {
      std::cout << "unavoidable: not checked (more than "
                << kUnavoidableVariableGuard << " variables)\n";
    }
  }
  return enc ? kExitSuccess : kExitNegative;
}

int run_table(const std::string& kind, unsigned n, unsigned q, unsigned m,
              std::string format, const std::string& out_path, unsigned scale,
              unsigned workers, bool list_avoiders) {
  check_table_shape(q, m);
  const Alphabet a(q);
  const CountTable table = kind == "truth" ? truth_table(n, a, m, workers)
                                           : density_table(n, a, m, workers);
  const auto ones = one_positions(table);
  const std::uint32_t max_entry =
      table.entries.empty()
          ? 0
          : *std::max_element(table.entries.begin(), table.entries.end());
  std::string summary =
      "kind=" + kind + " n=" + std::to_string(n) + " q=" + std::to_string(q) +
      " m=" + std::to_string(m) + " entries=" +
      std::to_string(table.entries.size()) + " ones=" +
      std::to_string(ones.size()) + "/" + std::to_string(table.entries.size()) +
      " max=" + std::to_string(max_entry) +
      " bound=" + std::to_string(max_density_bound(n, m));
  if (list_avoiders) {
    summary += "\navoiders:";
    for (std::uint64_t i = 0; i < table.entries.size(); ++i) {
      if (table.entries[i] == 0) {
        summary += " " + std::to_string(i) + " (" +
                   word_from_index(i, a, m).str() + ")";
      }
    }
  }

  if (format.empty() && !out_path.empty()) {
    const auto ext = std::filesystem::path(out_path).extension();
    if (ext == ".csv") format = "csv";
    else if (ext == ".pgm") format = "pgm";
    else format = "bin";
  }

  if (out_path.empty()) {
    if (format == "csv") {
      // keep stdout clean for the artifact
      std::cerr << summary << "\n";
      export_csv(table, std::cout);
      return kExitSuccess;
    }
    if (!format.empty()) {
      throw CLI::ValidationError("--out",
                                 "--out is required for --format " + format);
    }
    std::cout << summary << "\n";
    return kExitSuccess;
  }

  if (format == "csv") {
    export_csv_file(table, out_path);
  } else if (format == "pgm") {
    render_raster_file(table, out_path, scale);
  } else {
    write_table_file(table, out_path);
  }
  std::cout << summary << "\n";
  std::cout << "wrote " << out_path << "\n";
  return kExitSuccess;
}

int run_verify(unsigned n, unsigned q, bool extended, unsigned workers,
               const std::string& out_path) {
  const Alphabet a(q);
  const SelfRefWitness result = extended ? verify_extension(n, a, workers)
                                         : verify_self_reference(n, a, workers);
  std::cout << render_report(result);
  std::cout << render_reconciliation(reconcile_published_density_row());
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << render_record(result) << "\n";
    std::cout << "wrote " << out_path << "\n";
  }
  std::cout << "result: PASS\n";
  return kExitSuccess;
}

void print_frontier(const FrontierNode& node, unsigned depth) {
  std::cout << std::string(2 * static_cast<std::size_t>(depth), ' ');
  std::cout << (node.word.empty() ? std::string("ε") : node.word.str());
  if (node.encounters_pattern) std::cout << " *";
  std::cout << "\n";
  for (const auto& child : node.children) print_frontier(child, depth + 1);
}

void frontier_counts(const FrontierNode& node,
                     std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>>& acc) {
  auto& [total, avoiding] = acc[node.word.size()];
  ++total;
  if (!node.encounters_pattern) ++avoiding;
  for (const auto& child : node.children) frontier_counts(child, acc);
}

int run_frontier(unsigned n, unsigned q, unsigned max_len, bool append) {
  const Alphabet a(q);
  const auto tree = avoidance_frontier(
      n, a, max_len,
      append ? GrowthDirection::append : GrowthDirection::prepend);
  std::cout << "frontier n=" << n << " q=" << q << " max-len=" << max_len
            << (append ? " (append)" : " (prepend)") << "\n";
  print_frontier(tree.root, 0);
  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> counts;
  frontier_counts(tree.root, counts);
  for (const auto& [len, c] : counts) {
    std::cout << "length " << len << ": " << c.first << " in tree, "
              << c.second << " avoid\n";
  }
  return kExitSuccess;
}

int run_threshold(unsigned n, unsigned q, unsigned limit) {
  const auto t = avoidance_threshold(n, Alphabet(q), limit);
  if (!t) {
    std::cerr << "no collapse within length " << limit << "\n";
    return kExitNegative;
  }
  std::cout << *t << "\n";
  return kExitSuccess;
}

int run_instances(unsigned n, unsigned q) {
  const auto set = instances(n, Alphabet(q));
  for (const Word& w : set.words) {
    std::cout << lex_index(w) << " " << w.str() << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zimin pattern toolkit: instance and encounter checks, truth "
               "and density tables, self-reference verification"};
  app.require_subcommand(1);

  unsigned n = 0, q = 0, m = 0, scale = 1, workers = 1, limit = 20, max_len = 6;
  std::string word_str, pattern_str, kind, format, out_path;
  bool with_density = false, extended = false, append = false,
       list_avoiders = false;

  auto* print_cmd = app.add_subcommand("print", "print a zimin pattern");
  print_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxZiminIndex));

  auto* check_cmd = app.add_subcommand("check", "test a word against a pattern");
  check_cmd->add_option("--word", word_str, "word digits")->required();
  check_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));
  auto* check_n = check_cmd->add_option("--n", n, "zimin index")
                      ->check(CLI::Range(1u, kMaxZiminIndex));
  auto* check_p = check_cmd->add_option("--pattern", pattern_str,
                                        "pattern variable digits");
  check_n->excludes(check_p);
  check_cmd->add_flag("--density", with_density, "also report the density");

  auto* table_cmd = app.add_subcommand("table", "compute a truth or density table");
  table_cmd->add_option("--kind", kind, "truth or density")
      ->required()
      ->check(CLI::IsMember({"truth", "density"}));
  table_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxZiminIndex));
  table_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));
  table_cmd->add_option("--m", m, "word length")
      ->required()
      ->check(CLI::Range(0u, kMaxWordLength));
  table_cmd->add_option("--out", out_path, "output file");
  table_cmd->add_option("--format", format, "bin, csv or pgm")
      ->check(CLI::IsMember({"bin", "csv", "pgm"}));
  table_cmd->add_option("--scale", scale, "pgm cell size in pixels")
      ->check(CLI::Range(1u, 64u));
  table_cmd->add_option("--workers", workers, "fill threads")
      ->check(CLI::Range(1u, 256u));
  table_cmd->add_flag("--avoiders", list_avoiders,
                      "also list the indices and words with entry 0");

  auto* verify_cmd = app.add_subcommand(
      "verify", "verify the self-referential structure of a truth table");
  verify_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxZiminIndex));
  verify_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));
  verify_cmd->add_flag("--extended", extended,
                       "check the length-2^n table two levels up");
  verify_cmd->add_option("--workers", workers, "fill threads")
      ->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--out", out_path, "write the machine-readable record");

  auto* frontier_cmd =
      app.add_subcommand("frontier", "print the avoidance tree");
  frontier_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxZiminIndex));
  frontier_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));
  frontier_cmd->add_option("--max-len", max_len, "tree depth limit")
      ->check(CLI::Range(0u, kMaxFrontierLength));
  frontier_cmd->add_flag("--append", append,
                         "grow words by appending instead of prepending");

  auto* threshold_cmd = app.add_subcommand(
      "threshold", "least length at which every word encounters the pattern");
  threshold_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxZiminIndex));
  threshold_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));
  threshold_cmd->add_option("--limit", limit, "search limit")
      ->check(CLI::Range(1u, kMaxFrontierLength));

  auto* instances_cmd = app.add_subcommand(
      "instances", "list the minimal-length instances with their indices");
  instances_cmd->add_option("--n", n, "zimin index")
      ->required()
      ->check(CLI::Range(1u, kMaxInstanceSetIndex));
  instances_cmd->add_option("--q", q, "alphabet size")
      ->required()
      ->check(CLI::Range(kMinAlphabetSize, kMaxAlphabetSize));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (print_cmd->parsed()) return run_print(n);
    if (check_cmd->parsed()) {
      if (check_n->count() == 0 && check_p->count() == 0) {
        std::cerr << "check requires exactly one of --n or --pattern\n";
        return kExitUsage;
      }
      return run_check(word_str, q,
                       check_n->count() ? std::optional<unsigned>(n)
                                        : std::nullopt,
                       check_p->count() ? std::optional<std::string>(pattern_str)
                                        : std::nullopt,
                       with_density);
    }
    if (table_cmd->parsed())
      return run_table(kind, n, q, m, format, out_path, scale, workers,
                       list_avoiders);
    if (verify_cmd->parsed())
      return run_verify(n, q, extended, workers, out_path);
    if (frontier_cmd->parsed()) return run_frontier(n, q, max_len, append);
    if (threshold_cmd->parsed()) return run_threshold(n, q, limit);
    if (instances_cmd->parsed()) return run_instances(n, q);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitNegative;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
