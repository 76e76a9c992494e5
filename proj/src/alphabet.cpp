#include "zimin/alphabet.hpp"

namespace zimin {

char symbol_to_digit(Symbol s) {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < kMaxAlphabetSize) return static_cast<char>('A' + (s - 10));
  throw std::out_of_range("symbol " + std::to_string(s) +
                          " has no digit rendering");
}

std::optional<Symbol> symbol_from_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 10);
  return std::nullopt;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (acc > (kIndexLimit - 1) / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

std::uint64_t index_space(Alphabet a, unsigned length) {
  auto space = checked_pow(a.size(), length);
  if (!space) {
    throw std::out_of_range("index space " + std::to_string(a.size()) + "^" +
                            std::to_string(length) +
                            " exceeds the 63-bit limit");
  }
  return *space;
}

}  // namespace zimin
