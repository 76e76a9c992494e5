#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zimin/alphabet.hpp"
#include "zimin/word.hpp"

namespace zimin {

inline constexpr unsigned kMaxZiminIndex = 20;
inline constexpr unsigned kMaxParsedPatternLength = 63;

/// Word over a variable alphabet. Construction renumbers the variables into
/// first-occurrence order, so ids are always exactly 0..variable_count()-1
/// and two patterns that differ only by a renaming compare equal.
class Pattern {
 public:
  explicit Pattern(std::span<const Symbol> variables);

  /// Parses a variable string with the same digit convention as words.
  /// Parsed patterns are capped at kMaxParsedPatternLength variables;
  /// internally built patterns (zimin_pattern) may be longer.
  static Pattern parse(std::string_view digits);

  std::size_t size() const { return vars_.size(); }
  unsigned variable_count() const { return var_count_; }
  Symbol operator[](std::size_t i) const { return vars_[i]; }
  std::span<const Symbol> variables() const { return vars_; }

  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern() = default;
  friend Pattern zimin_pattern(unsigned n);

  std::vector<Symbol> vars_;
  unsigned var_count_ = 0;
};

/// The n-variable Zimin pattern: a single variable for n = 1, and
/// previous + fresh variable + previous after that. Its length is 2^n - 1.
Pattern zimin_pattern(unsigned n);

/// Total map from pattern variables to nonempty symbol strings — a
/// non-erasing morphism. images[v] is the image of variable v.
struct Witness {
  std::vector<std::vector<Symbol>> images;

  /// Concatenated image of the pattern.
  std::vector<Symbol> apply(const Pattern& p) const;

  /// True when applying the witness to p reproduces `word` exactly.
  bool reproduces(const Pattern& p, std::span<const Symbol> word) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// A contiguous stretch of a word that is a pattern instance, together with
/// the morphism showing it. Positions are 0-based and `end` is inclusive.
struct Occurrence {
  std::size_t start = 0;
  std::size_t end = 0;
  Witness witness;

  std::size_t length() const { return end - start + 1; }
};

}  // namespace zimin
