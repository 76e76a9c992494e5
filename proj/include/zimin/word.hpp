#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "zimin/alphabet.hpp"

namespace zimin {

/// Fixed-length word over a q-letter alphabet, at most kMaxWordLength
/// symbols. A word doubles as a base-q numeral, most significant symbol
/// first, which is what ties lexicographic order to index arithmetic.
///
/// Words are immutable values with inline storage; copying is cheap and
/// sharing across threads is safe.
class Word {
 public:
  Word(Alphabet a, std::span<const Symbol> symbols);

  /// Parses a digit string (0-9 then A-Z). Length and leading zeros are
  /// preserved; symbols must fall below the alphabet size.
  static Word parse(Alphabet a, std::string_view digits);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return {symbols_.data(), size_}; }

  /// Digit string rendering; inverse of parse.
  std::string str() const;

  friend bool operator==(const Word& lhs, const Word& rhs);
  /// Lexicographic on symbols; for equal lengths this agrees with the
  /// numeric order of lex_index.
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  friend class LexCursor;
  struct Trusted {};
  Word(Alphabet a, std::span<const Symbol> symbols, Trusted);

  Alphabet alphabet_;
  std::uint8_t size_ = 0;
  std::array<Symbol, kMaxWordLength> symbols_{};
};

/// Position of w in the lexicographic enumeration of words of its length,
/// i.e. the base-q value of w. Throws std::out_of_range when the enumeration
/// would not fit the 63-bit index space (q^m >= 2^63).
std::uint64_t lex_index(const Word& w);

/// Word of the given length whose lex_index is `index`; leading zeros are
/// preserved. Requires index < q^length.
Word word_from_index(std::uint64_t index, Alphabet a, unsigned length);

/// Streams the words of one length in lexicographic order. Supports
/// range-splitting (start index plus count) so table fills can be divided
/// across threads; cursors are independent of each other.
class LexCursor {
 public:
  LexCursor(Alphabet a, unsigned length);
  LexCursor(Alphabet a, unsigned length, std::uint64_t start,
            std::uint64_t count);

  bool done() const { return index_ == end_; }
  /// Index of the word next() would yield.
  std::uint64_t index() const { return index_; }
  std::uint64_t remaining() const { return end_ - index_; }

  const Word& peek() const;
  Word next();

 private:
  void advance();

  Word current_;
  std::uint64_t index_ = 0;
  std::uint64_t end_ = 0;
};

/// Full enumeration of the q^length words of one length. Requires
/// q^length < 2^63.
LexCursor enumerate(Alphabet a, unsigned length);

}  // namespace zimin
