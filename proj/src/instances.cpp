#include "zimin/instances.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "zimin/match.hpp"

namespace zimin {
namespace {

std::vector<Symbol> sandwich(std::span<const Symbol> u, Symbol s) {
  std::vector<Symbol> out;
  out.reserve(2 * u.size() + 1);
  out.insert(out.end(), u.begin(), u.end());
  out.push_back(s);
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

// u must be a minimal-length instance; returns its Zimin level.
unsigned require_minimal_instance(const Word& u, const char* who) {
  auto level = zimin_level_for_length(u.size());
  if (!level || !is_zimin_instance(u, *level)) {
    throw std::invalid_argument(std::string(who) + ": " + u.str() +
                                " is not a minimal-length Zimin instance");
  }
  return *level;
}

}  // namespace

std::optional<unsigned> zimin_level_for_length(std::size_t length) {
  for (unsigned k = 1; k <= kMaxInstanceSetIndex; ++k) {
    if (length == (std::size_t{1} << k) - 1) return k;
  }
  return std::nullopt;
}

InstanceSet instances(unsigned n, Alphabet a) {
  if (n < 1 || n > kMaxInstanceSetIndex) {
    throw std::out_of_range("instance sets exist for Zimin indices in [1, " +
                            std::to_string(kMaxInstanceSetIndex) + "], got " +
                            std::to_string(n));
  }
  auto size = checked_pow(a.size(), n);
  if (!size || *size > kMaxInstanceSetSize) {
    throw std::out_of_range("instance set of size " + std::to_string(a.size()) +
                            "^" + std::to_string(n) + " exceeds the cap");
  }
  InstanceSet set{n, a, {}};
  set.words.reserve(*size);
  for (Symbol s = 0; s < a.size(); ++s) {
    set.words.push_back(Word(a, std::span<const Symbol>(&s, 1)));
  }
  for (unsigned level = 2; level <= n; ++level) {
    std::vector<Word> next;
    next.reserve(set.words.size() * a.size());
    for (const Word& u : set.words) {
      auto children = generate(u);
      next.insert(next.end(), children.begin(), children.end());
    }
    set.words = std::move(next);
  }
  assert(set.words.size() == *size);
  assert(std::is_sorted(set.words.begin(), set.words.end()));
  return set;
}

std::vector<Word> generate(const Word& u) {
  if (2 * u.size() + 1 > kMaxWordLength) {
    throw std::out_of_range("generated words of length " +
                            std::to_string(2 * u.size() + 1) +
                            " exceed the maximum word length");
  }
  std::vector<Word> out;
  out.reserve(u.alphabet().size());
  for (Symbol s = 0; s < u.alphabet().size(); ++s) {
    out.push_back(Word(u.alphabet(), sandwich(u.symbols(), s)));
  }
  return out;
}

std::uint64_t family_gap(const Word& u) {
  auto gap = checked_pow(u.alphabet().size(), static_cast<unsigned>(u.size()));
  if (!gap) {
    throw std::out_of_range("family gap " + std::to_string(u.alphabet().size()) +
                            "^" + std::to_string(u.size()) +
                            " exceeds the 63-bit index space");
  }
  return *gap;
}

std::uint64_t cross_gap(const Word& u, const Word& v) {
  require_minimal_instance(u, "cross_gap");
  require_minimal_instance(v, "cross_gap");
  if (u.alphabet() != v.alphabet() || u.size() != v.size() ||
      next_instance(u) != std::optional<Word>(v)) {
    throw std::invalid_argument("cross_gap: " + u.str() + " and " + v.str() +
                                " are not neighboring minimal instances");
  }
  const unsigned q = u.alphabet().size();
  const unsigned m = static_cast<unsigned>(u.size());
  // lex_index(v 0 v) - lex_index(u Q u)
  //   = q^{m+1} dv + dv - (q^{m+1} du + (q-1) q^m + du)
  // with the middle digit of u Q u worth (q-1) q^m. The children live in the
  // enumeration of length 2m+1, so that index space must be representable.
  if (!checked_pow(q, 2 * m + 1)) {
    throw std::out_of_range("cross gap at length " + std::to_string(2 * m + 1) +
                            " exceeds the 63-bit index space");
  }
  const std::uint64_t outer = *checked_pow(q, m + 1);
  const std::uint64_t du = lex_index(u);
  const std::uint64_t dv = lex_index(v);
  assert(dv > du);
  const std::uint64_t diff = dv - du;
  const std::uint64_t middle = (q - 1) * (outer / q);
  return (outer + 1) * diff - middle;
}

std::optional<Word> next_instance(const Word& u) {
  const unsigned level = require_minimal_instance(u, "next_instance");
  const Alphabet a = u.alphabet();
  if (level == 1) {
    if (u[0] == a.max_symbol()) return std::nullopt;
    const Symbol s = static_cast<Symbol>(u[0] + 1);
    return Word(a, std::span<const Symbol>(&s, 1));
  }
  // u = P s P with |P| = 2^(level-1) - 1; bump s, else advance P and restart
  // its children at symbol 0.
  const std::size_t half = u.size() / 2;
  const Word prefix(a, u.symbols().subspan(0, half));
  const Symbol middle = u[half];
  if (middle < a.max_symbol()) {
    return Word(a, sandwich(prefix.symbols(), static_cast<Symbol>(middle + 1)));
  }
  auto next_prefix = next_instance(prefix);
  if (!next_prefix) return std::nullopt;
  return Word(a, sandwich(next_prefix->symbols(), 0));
}

}  // namespace zimin
