#include "zimin/word.hpp"

#include <cassert>

namespace zimin {

Word::Word(Alphabet a, std::span<const Symbol> symbols) : alphabet_(a) {
  if (symbols.size() > kMaxWordLength) {
    throw std::out_of_range("word length " + std::to_string(symbols.size()) +
                            " exceeds the maximum of " +
                            std::to_string(kMaxWordLength));
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!a.contains(symbols[i])) {
      throw std::invalid_argument("symbol " + std::to_string(symbols[i]) +
                                  " at position " + std::to_string(i) +
                                  " is outside the " +
                                  std::to_string(a.size()) + "-letter alphabet");
    }
    symbols_[i] = symbols[i];
  }
  size_ = static_cast<std::uint8_t>(symbols.size());
}

Word::Word(Alphabet a, std::span<const Symbol> symbols, Trusted)
    : alphabet_(a), size_(static_cast<std::uint8_t>(symbols.size())) {
  assert(symbols.size() <= kMaxWordLength);
  for (std::size_t i = 0; i < symbols.size(); ++i) symbols_[i] = symbols[i];
}

Word Word::parse(Alphabet a, std::string_view digits) {
  if (digits.size() > kMaxWordLength) {
    throw std::out_of_range("word length " + std::to_string(digits.size()) +
                            " exceeds the maximum of " +
                            std::to_string(kMaxWordLength));
  }
  std::array<Symbol, kMaxWordLength> buf{};
  for (std::size_t i = 0; i < digits.size(); ++i) {
    auto s = symbol_from_digit(digits[i]);
    if (!s) {
      throw std::invalid_argument(std::string("invalid digit '") + digits[i] +
                                  "' at position " + std::to_string(i));
    }
    buf[i] = *s;
  }
  return Word(a, {buf.data(), digits.size()});
}

std::string Word::str() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(symbol_to_digit(symbols_[i]));
  return out;
}

bool operator==(const Word& lhs, const Word& rhs) {
  return lhs.alphabet_ == rhs.alphabet_ && lhs.size_ == rhs.size_ &&
         std::equal(lhs.symbols().begin(), lhs.symbols().end(),
                    rhs.symbols().begin());
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  auto ls = lhs.symbols();
  auto rs = rhs.symbols();
  auto cmp = std::lexicographical_compare_three_way(ls.begin(), ls.end(),
                                                    rs.begin(), rs.end());
  if (cmp != std::strong_ordering::equal) return cmp;
  return lhs.alphabet_.size() <=> rhs.alphabet_.size();
}

std::uint64_t lex_index(const Word& w) {
  index_space(w.alphabet(), static_cast<unsigned>(w.size()));  // range check
  std::uint64_t value = 0;
  for (Symbol s : w.symbols()) value = value * w.alphabet().size() + s;
  return value;
}

Word word_from_index(std::uint64_t index, Alphabet a, unsigned length) {
  std::uint64_t space = index_space(a, length);
  if (index >= space) {
    throw std::out_of_range("index " + std::to_string(index) +
                            " is outside the enumeration of " +
                            std::to_string(space) + " words");
  }
  std::array<Symbol, kMaxWordLength> buf{};
  for (unsigned i = length; i-- > 0;) {
    buf[i] = static_cast<Symbol>(index % a.size());
    index /= a.size();
  }
  return Word(a, {buf.data(), length});
}

LexCursor::LexCursor(Alphabet a, unsigned length)
    : LexCursor(a, length, 0, index_space(a, length)) {}

LexCursor::LexCursor(Alphabet a, unsigned length, std::uint64_t start,
                     std::uint64_t count)
    : current_(word_from_index(0, a, length)), index_(start), end_(start + count) {
  std::uint64_t space = index_space(a, length);
  if (start > space || count > space - start) {
    throw std::out_of_range("cursor range [" + std::to_string(start) + ", " +
                            std::to_string(start) + "+" + std::to_string(count) +
                            ") is outside the enumeration of " +
                            std::to_string(space) + " words");
  }
  if (index_ < end_) current_ = word_from_index(index_, a, length);
}

const Word& LexCursor::peek() const {
  assert(!done());
  return current_;
}

Word LexCursor::next() {
  assert(!done());
  Word out = current_;
  ++index_;
  if (!done()) advance();
  return out;
}

void LexCursor::advance() {
  // Odometer step: bump the least significant symbol, carrying left.
  const Symbol top = current_.alphabet().max_symbol();
  std::size_t i = current_.size();
  while (i-- > 0) {
    if (current_.symbols_[i] < top) {
      ++current_.symbols_[i];
      return;
    }
    current_.symbols_[i] = 0;
  }
  assert(false && "advance past the end of the enumeration");
}

LexCursor enumerate(Alphabet a, unsigned length) {
  return LexCursor(a, length);
}

}  // namespace zimin
