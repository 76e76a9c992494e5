#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zimin/alphabet.hpp"

namespace zimin::testutil {

inline std::vector<Symbol> syms(std::string_view digits) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) out.push_back(*symbol_from_digit(c));
  return out;
}

inline std::string digits(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(symbol_to_digit(s));
  return out;
}

/// Calls fn with every q-ary symbol string of the given length.
inline void each_word(unsigned q, unsigned length, auto fn) {
  std::vector<Symbol> w(length, 0);
  while (true) {
    fn(std::span<const Symbol>(w));
    std::size_t i = length;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace zimin::testutil
