#include "zimin/match.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace zimin {
namespace {

// Shortest possible instance of zimin_pattern(n): every variable image has
// length at least one, so 2^n - 1 symbols.
std::uint64_t min_zimin_length(unsigned n) {
  if (n >= 63) return kIndexLimit;
  return (std::uint64_t{1} << n) - 1;
}

// Recursive Zimin instance checks over one word, memoized per (begin, end, n)
// within the lifetime of the matcher. A matcher belongs to a single top-level
// query; caches are never shared across queries.
class ZiminMatcher {
 public:
  explicit ZiminMatcher(std::span<const Symbol> word) : word_(word) {}

  // Is word[begin..end) an instance of zimin_pattern(n)?
  bool instance(std::size_t begin, std::size_t end, unsigned n) {
    assert(n >= 1 && end <= word_.size() && begin <= end);
    const std::size_t len = end - begin;
    if (n == 1) return len >= 1;
    if (len < min_zimin_length(n)) return false;
    auto& map = memo_for(n);
    const std::uint64_t key =
        static_cast<std::uint64_t>(begin) * (word_.size() + 1) + end;
    if (auto it = map.find(key); it != map.end()) return it->second;
    bool ok = false;
    for (std::size_t b : borders_ascending(begin, len)) {
      if (2 * b < len && instance(begin, begin + b, n - 1)) {
        ok = true;
        break;
      }
    }
    map.emplace(key, ok);
    return ok;
  }

  bool encounters(unsigned n) {
    const std::uint64_t minlen = min_zimin_length(n);
    if (word_.size() < minlen) return false;
    for (std::size_t start = 0; start + minlen <= word_.size(); ++start) {
      for (std::size_t len = minlen; start + len <= word_.size(); ++len) {
        if (instance(start, start + len, n)) return true;
      }
    }
    return false;
  }

  std::uint64_t count_instances(unsigned n) {
    const std::uint64_t minlen = min_zimin_length(n);
    std::uint64_t count = 0;
    if (word_.size() < minlen) return 0;
    for (std::size_t start = 0; start + minlen <= word_.size(); ++start) {
      for (std::size_t len = minlen; start + len <= word_.size(); ++len) {
        if (instance(start, start + len, n)) ++count;
      }
    }
    return count;
  }

  // Witness from the border decomposition, shortest admissible border at
  // every level. The middle block at level k is the image of variable k-1.
  std::optional<Witness> extract(unsigned n) {
    if (!instance(0, word_.size(), n)) return std::nullopt;
    Witness wit;
    wit.images.resize(n);
    std::size_t end = word_.size();
    for (unsigned level = n; level >= 2; --level) {
      const std::size_t b = shortest_admissible_border(end, level);
      wit.images[level - 1].assign(word_.begin() + b,
                                   word_.begin() + (end - b));
      end = b;
    }
    wit.images[0].assign(word_.begin(), word_.begin() + end);
    return wit;
  }

 private:
  std::vector<std::size_t> borders_ascending(std::size_t begin,
                                             std::size_t len) {
    const auto& pi = failure(begin);
    std::vector<std::size_t> chain;
    for (std::uint32_t b = pi[len]; b > 0; b = pi[b]) chain.push_back(b);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  std::size_t shortest_admissible_border(std::size_t end, unsigned level) {
    for (std::size_t b : borders_ascending(0, end)) {
      if (2 * b < end && instance(0, b, level - 1)) return b;
    }
    assert(false && "no admissible border for a verified instance");
    return 0;
  }

  // Prefix-function of the suffix word[begin..); entry k is the longest
  // proper border of the first k symbols of that suffix.
  const std::vector<std::uint32_t>& failure(std::size_t begin) {
    auto [it, inserted] = failures_.try_emplace(begin);
    auto& pi = it->second;
    if (!inserted) return pi;
    const std::size_t len = word_.size() - begin;
    pi.assign(len + 1, 0);
    std::uint32_t k = 0;
    for (std::size_t i = 1; i < len; ++i) {
      while (k > 0 && word_[begin + i] != word_[begin + k]) k = pi[k];
      if (word_[begin + i] == word_[begin + k]) ++k;
      pi[i + 1] = k;
    }
    return pi;
  }

  std::unordered_map<std::uint64_t, bool>& memo_for(unsigned n) {
    if (memo_.size() <= n) memo_.resize(n + 1);
    return memo_[n];
  }

  std::span<const Symbol> word_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> failures_;
};

// Backtracking morphism search. Image lengths are tried in ascending order
// position by position, so the first complete assignment found is the
// canonical one.
class MorphismSearch {
 public:
  MorphismSearch(std::span<const Symbol> word, const Pattern& pat)
      : word_(word), pat_(pat), image_(pat.variable_count(), Segment{}) {}

  std::optional<Witness> run() {
    if (!dfs(0, 0)) return std::nullopt;
    Witness wit;
    wit.images.resize(pat_.variable_count());
    for (unsigned v = 0; v < pat_.variable_count(); ++v) {
      wit.images[v].assign(word_.begin() + image_[v].begin,
                           word_.begin() + image_[v].begin + image_[v].len);
    }
    return wit;
  }

 private:
  struct Segment {
    std::size_t begin = 0;
    std::size_t len = 0;  // 0 = unassigned; assigned images are nonempty
  };

  bool dfs(std::size_t pp, std::size_t wp) {
    if (pp == pat_.size()) return wp == word_.size();
    const std::size_t rest = pat_.size() - pp - 1;
    if (wp + rest >= word_.size()) return false;  // not enough symbols left
    const Symbol v = pat_[pp];
    if (image_[v].len != 0) {
      const Segment seg = image_[v];
      if (wp + seg.len + rest > word_.size()) return false;
      if (!std::equal(word_.begin() + seg.begin,
                      word_.begin() + seg.begin + seg.len, word_.begin() + wp))
        return false;
      return dfs(pp + 1, wp + seg.len);
    }
    const std::size_t budget = word_.size() - wp - rest;
    for (std::size_t len = 1; len <= budget; ++len) {
      image_[v] = {wp, len};
      if (dfs(pp + 1, wp + len)) return true;
    }
    image_[v] = {};
    return false;
  }

  std::span<const Symbol> word_;
  const Pattern& pat_;
  std::vector<Segment> image_;
};

// Zimin patterns are exactly the ruler sequence: position i carries the
// variable countr_zero(i + 1).
bool is_zimin_shaped(const Pattern& p) {
  const unsigned k = p.variable_count();
  if (k > kMaxZiminIndex) return false;
  if (p.size() != (std::size_t{1} << k) - 1) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<Symbol>(std::countr_zero(i + 1))) return false;
  }
  return true;
}

}  // namespace

std::optional<Witness> find_witness(std::span<const Symbol> word,
                                    const Pattern& p) {
  auto wit = MorphismSearch(word, p).run();
  assert(!wit || wit->reproduces(p, word));
  return wit;
}

std::optional<Witness> find_witness(const Word& w, const Pattern& p) {
  return find_witness(w.symbols(), p);
}

bool encounters(std::span<const Symbol> word, const Pattern& p) {
  if (is_zimin_shaped(p)) return ZiminMatcher(word).encounters(p.variable_count());
  return find_encounter(word, p).has_value();
}

bool encounters(const Word& w, const Pattern& p) {
  return encounters(w.symbols(), p);
}

std::optional<Occurrence> find_encounter(std::span<const Symbol> word,
                                         const Pattern& p) {
  const std::size_t minlen = p.size();
  if (word.size() < minlen) return std::nullopt;
  const bool zimin_shaped = is_zimin_shaped(p);
  ZiminMatcher matcher(word);
  for (std::size_t start = 0; start + minlen <= word.size(); ++start) {
    for (std::size_t len = minlen; start + len <= word.size(); ++len) {
      if (zimin_shaped &&
          !matcher.instance(start, start + len, p.variable_count())) {
        continue;
      }
      auto wit = find_witness(word.subspan(start, len), p);
      if (!wit) {
        assert(!zimin_shaped);
        continue;
      }
      return Occurrence{start, start + len - 1, std::move(*wit)};
    }
  }
  return std::nullopt;
}

std::optional<Occurrence> find_encounter(const Word& w, const Pattern& p) {
  return find_encounter(w.symbols(), p);
}

std::uint64_t density(std::span<const Symbol> word, const Pattern& p) {
  if (is_zimin_shaped(p)) {
    return ZiminMatcher(word).count_instances(p.variable_count());
  }
  const std::size_t minlen = p.size();
  std::uint64_t count = 0;
  if (word.size() < minlen) return 0;
  for (std::size_t start = 0; start + minlen <= word.size(); ++start) {
    for (std::size_t len = minlen; start + len <= word.size(); ++len) {
      if (find_witness(word.subspan(start, len), p)) ++count;
    }
  }
  return count;
}

std::uint64_t density(const Word& w, const Pattern& p) {
  return density(w.symbols(), p);
}

bool is_zimin_instance(std::span<const Symbol> word, unsigned n) {
  if (n < 1) throw std::out_of_range("zimin index must be at least 1");
  return ZiminMatcher(word).instance(0, word.size(), n);
}

bool is_zimin_instance(const Word& w, unsigned n) {
  return is_zimin_instance(w.symbols(), n);
}

std::optional<Witness> zimin_instance_witness(std::span<const Symbol> word,
                                              unsigned n) {
  if (n < 1) throw std::out_of_range("zimin index must be at least 1");
  auto wit = ZiminMatcher(word).extract(n);
  assert(!wit || wit->reproduces(zimin_pattern(n), word));
  return wit;
}

bool is_unavoidable(const Pattern& p) {
  if (p.variable_count() > kUnavoidableVariableGuard) {
    throw std::out_of_range("unavoidability check limited to patterns with at most " +
                            std::to_string(kUnavoidableVariableGuard) +
                            " distinct variables, got " +
                            std::to_string(p.variable_count()));
  }
  const Pattern z = zimin_pattern(p.variable_count());
  return encounters(z.variables(), p);
}

}  // namespace zimin
