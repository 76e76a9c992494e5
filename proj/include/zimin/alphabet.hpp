#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zimin {

/// A single letter of a word, always a small natural number below the
/// alphabet size.
using Symbol = std::uint8_t;

inline constexpr unsigned kMinAlphabetSize = 2;
inline constexpr unsigned kMaxAlphabetSize = 36;  // symbols print as 0-9 then A-Z
inline constexpr unsigned kMaxWordLength = 63;

/// Indices and index spaces must stay below 2^63 so that every difference of
/// indices also fits comfortably in 64 bits.
inline constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 63;

/// q-letter alphabet over the symbols 0..q-1.
class Alphabet {
 public:
  explicit Alphabet(unsigned q) : q_(q) {
    if (q < kMinAlphabetSize || q > kMaxAlphabetSize) {
      throw std::out_of_range("alphabet size must be in [" +
                              std::to_string(kMinAlphabetSize) + ", " +
                              std::to_string(kMaxAlphabetSize) + "], got " +
                              std::to_string(q));
    }
  }

  unsigned size() const { return q_; }

  /// The distinguished largest symbol q-1 (the one-letter word Q).
  Symbol max_symbol() const { return static_cast<Symbol>(q_ - 1); }

  bool contains(Symbol s) const { return s < q_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned q_;
};

/// Digit used to print a symbol: 0-9 for values below ten, A-Z above.
char symbol_to_digit(Symbol s);

/// Inverse of symbol_to_digit; empty when the character is not a digit.
std::optional<Symbol> symbol_from_digit(char c);

/// base^exp, or empty once the value would reach 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// q^length with a range check; throws std::out_of_range at 2^63 and beyond.
std::uint64_t index_space(Alphabet a, unsigned length);

}  // namespace zimin
