#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zimin/word.hpp"

namespace zimin {

/// Longest word length representable here is kMaxWordLength, so minimal
/// instances exist only up to this Zimin index (2^6 - 1 = 63).
inline constexpr unsigned kMaxInstanceSetIndex = 6;
/// Memory guard on materialized instance sets (q^n words).
inline constexpr std::uint64_t kMaxInstanceSetSize = std::uint64_t{1} << 22;

/// The q^n minimal-length instances of zimin_pattern(n): every word of
/// length 2^n - 1 that is an instance, in lexicographic order. Consecutive
/// members are neighbors (no instance of that length lies strictly between).
struct InstanceSet {
  unsigned zimin_index;
  Alphabet alphabet;
  std::vector<Word> words;
};

/// Builds the instance set recursively: the q one-symbol words at the base,
/// then every member U spawns U s U for each symbol s.
InstanceSet instances(unsigned n, Alphabet a);

/// The q next-level instances generated by u: u s u for s = 0..q-1, in
/// symbol order.
std::vector<Word> generate(const Word& u);

/// Index distance between consecutive children of one generator:
/// lex_index(u (s+1) u) - lex_index(u s u) = q^|u|.
std::uint64_t family_gap(const Word& u);

/// Index distance between the last child of u and the first child of its
/// neighbor v (v directly follows u among minimal instances):
/// lex_index(v 0 v) - lex_index(u Q u), evaluated in closed form.
/// Throws std::invalid_argument when u, v are not neighboring minimal
/// instances with u < v.
std::uint64_t cross_gap(const Word& u, const Word& v);

/// Successor of u among minimal instances of the same length, or empty when
/// u is the last one. Requires u to be a minimal-length instance.
std::optional<Word> next_instance(const Word& u);

/// Zimin index k with 2^k - 1 == length, if the length has that form.
std::optional<unsigned> zimin_level_for_length(std::size_t length);

}  // namespace zimin
