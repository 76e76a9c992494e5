#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "zimin/pattern.hpp"
#include "zimin/word.hpp"

namespace zimin {

/// Cost guard for is_unavoidable: patterns with more distinct variables than
/// this are rejected.
inline constexpr unsigned kUnavoidableVariableGuard = 5;

/// Witness that the whole word is an instance of p, or empty when it is not.
/// The returned witness is canonical: among all witnesses it minimizes the
/// image length of the variable at the first pattern position, then at the
/// second, and so on. Every returned witness reproduces the word exactly.
std::optional<Witness> find_witness(std::span<const Symbol> word,
                                    const Pattern& p);
std::optional<Witness> find_witness(const Word& w, const Pattern& p);

/// True when some contiguous subword of the word is an instance of p.
bool encounters(std::span<const Symbol> word, const Pattern& p);
bool encounters(const Word& w, const Pattern& p);

/// First encountered occurrence in scan order (start ascending, then length
/// ascending), with the canonical witness for that subword.
std::optional<Occurrence> find_encounter(std::span<const Symbol> word,
                                         const Pattern& p);
std::optional<Occurrence> find_encounter(const Word& w, const Pattern& p);

/// Number of position-distinct subword occurrences (start, end) that are
/// instances of p. Witnesses are not counted separately: one occurrence with
/// several morphisms still counts once.
std::uint64_t density(std::span<const Symbol> word, const Pattern& p);
std::uint64_t density(const Word& w, const Pattern& p);

/// Fast whole-word check against zimin_pattern(n): the word is an instance
/// iff it splits as P M P with M nonempty and the proper border P an
/// instance one level down; a one-variable instance is any nonempty word.
/// Equivalent to find_witness(word, zimin_pattern(n)) being present.
bool is_zimin_instance(std::span<const Symbol> word, unsigned n);
bool is_zimin_instance(const Word& w, unsigned n);

/// Witness extracted from the recursive border decomposition, taking the
/// shortest admissible border at every level. Deterministic; unlike
/// find_witness it stays cheap on very long words.
std::optional<Witness> zimin_instance_witness(std::span<const Symbol> word,
                                              unsigned n);

/// Zimin's characterization: a pattern with n distinct variables is
/// unavoidable iff the n-variable Zimin pattern, read as a concrete word,
/// encounters it.
bool is_unavoidable(const Pattern& p);

}  // namespace zimin
