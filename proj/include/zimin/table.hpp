#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zimin/alphabet.hpp"
#include "zimin/word.hpp"

namespace zimin {

inline constexpr unsigned kMaxFrontierLength = 20;

enum class TableKind : std::uint8_t { truth = 0, density = 1 };

/// Configuration triple (Zimin index, alphabet, word length) plus the kind
/// of per-word statistic recorded.
struct TableSpec {
  unsigned zimin_index;
  Alphabet alphabet;
  unsigned word_length;
  TableKind kind;

  /// q^word_length; must stay below 2^63.
  std::uint64_t entry_count() const {
    return index_space(alphabet, word_length);
  }

  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

/// Per-word statistics over the lexicographic enumeration: entry i belongs
/// to the word with lex index i. Truth tables hold 0/1 encounter flags,
/// density tables hold occurrence counts.
struct CountTable {
  TableSpec spec;
  std::vector<std::uint32_t> entries;
};

/// Entry i is 1 iff the i-th word of the enumeration encounters
/// zimin_pattern(n). For word length 2^n - 1 this coincides with the density
/// table. `workers` splits the fill across threads; it never changes the
/// result.
CountTable truth_table(unsigned n, Alphabet a, unsigned m, unsigned workers = 1);

/// Entry i is the density of zimin_pattern(n) in the i-th word.
CountTable density_table(unsigned n, Alphabet a, unsigned m, unsigned workers = 1);

/// Number of subword occurrences of length at least 2^n - 1 in a word of
/// length m: (m - 2^n + 2)(m - 2^n + 3)/2, or 0 when m < 2^n - 1. Every
/// density entry is bounded by this.
std::uint64_t max_density_bound(unsigned n, unsigned m);

/// Indices whose table entry is 0, i.e. the words of length m avoiding
/// zimin_pattern(n).
std::vector<std::uint64_t> avoider_positions(unsigned n, Alphabet a, unsigned m,
                                             unsigned workers = 1);

/// Least word length at which every word encounters zimin_pattern(n) (the
/// truth table is all ones), searched exhaustively up to `limit` via the
/// avoidance frontier; empty when the frontier is still alive at the limit.
std::optional<unsigned> avoidance_threshold(unsigned n, Alphabet a,
                                            unsigned limit);

/// How child words extend their parent in the avoidance tree. Prepending
/// matches the classical picture where branch i prefixes symbol i.
enum class GrowthDirection { prepend, append };

struct FrontierNode {
  Word word;
  bool encounters_pattern = false;
  std::vector<FrontierNode> children;  // present only when the word avoids
};

/// Tree of words ordered by length in which a node has children exactly when
/// its word avoids zimin_pattern(n), cut off at max_length.
struct FrontierTree {
  unsigned zimin_index;
  Alphabet alphabet;
  unsigned max_length;
  GrowthDirection direction;
  FrontierNode root;
};

FrontierTree avoidance_frontier(unsigned n, Alphabet a, unsigned max_length,
                                GrowthDirection direction = GrowthDirection::prepend);

/// The 0/1 entries of a truth table as symbols of a binary word.
std::vector<Symbol> truth_symbols(const CountTable& t);

/// Indices of nonzero entries.
std::vector<std::uint64_t> one_positions(const CountTable& t);

/// Display string: truth tables print as compact bits, density tables as
/// space-separated counts.
std::string table_digits(const CountTable& t);

}  // namespace zimin
