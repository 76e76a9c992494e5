#include "zimin/pattern.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace zimin {

Pattern::Pattern(std::span<const Symbol> variables) {
  if (variables.empty()) throw std::invalid_argument("pattern must be nonempty");
  std::array<Symbol, 256> renumber;
  renumber.fill(std::numeric_limits<Symbol>::max());
  vars_.reserve(variables.size());
  for (Symbol v : variables) {
    if (renumber[v] == std::numeric_limits<Symbol>::max()) {
      renumber[v] = static_cast<Symbol>(var_count_++);
    }
    vars_.push_back(renumber[v]);
  }
}

Pattern Pattern::parse(std::string_view digits) {
  if (digits.size() > kMaxParsedPatternLength) {
    throw std::out_of_range("pattern length " + std::to_string(digits.size()) +
                            " exceeds the maximum of " +
                            std::to_string(kMaxParsedPatternLength));
  }
  std::vector<Symbol> vars;
  vars.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    auto s = symbol_from_digit(digits[i]);
    if (!s) {
      throw std::invalid_argument(std::string("invalid variable digit '") +
                                  digits[i] + "' at position " +
                                  std::to_string(i));
    }
    vars.push_back(*s);
  }
  return Pattern(vars);
}

std::string Pattern::str() const {
  std::string out;
  out.reserve(vars_.size());
  for (Symbol v : vars_) out.push_back(symbol_to_digit(v));
  return out;
}

Pattern zimin_pattern(unsigned n) {
  if (n < 1 || n > kMaxZiminIndex) {
    throw std::out_of_range("zimin index must be in [1, " +
                            std::to_string(kMaxZiminIndex) + "], got " +
                            std::to_string(n));
  }
  Pattern p;
  p.vars_.reserve((std::size_t{1} << n) - 1);
  p.vars_.push_back(0);
  for (unsigned k = 1; k < n; ++k) {
    // previous, fresh variable, previous
    std::size_t prev = p.vars_.size();
    p.vars_.push_back(static_cast<Symbol>(k));
    p.vars_.insert(p.vars_.end(), p.vars_.begin(),
                   p.vars_.begin() + static_cast<std::ptrdiff_t>(prev));
  }
  p.var_count_ = n;
  return p;
}

std::vector<Symbol> Witness::apply(const Pattern& p) const {
  std::vector<Symbol> out;
  for (Symbol v : p.variables()) {
    const auto& img = images.at(v);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool Witness::reproduces(const Pattern& p, std::span<const Symbol> word) const {
  if (images.size() != p.variable_count()) return false;
  for (const auto& img : images) {
    if (img.empty()) return false;
  }
  std::size_t pos = 0;
  for (Symbol v : p.variables()) {
    const auto& img = images[v];
    if (pos + img.size() > word.size()) return false;
    if (!std::equal(img.begin(), img.end(), word.begin() + pos)) return false;
    pos += img.size();
  }
  return pos == word.size();
}

}  // namespace zimin
