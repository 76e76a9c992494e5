#include "zimin/table.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "zimin/match.hpp"

namespace zimin {
namespace {

constexpr unsigned kMaxWorkers = 256;

void check_table_args(unsigned n, Alphabet a, unsigned m) {
  if (n < 1) throw std::out_of_range("zimin index must be at least 1");
  zimin_pattern(n);  // range-checks n
  if (m > kMaxWordLength) {
    throw std::out_of_range("word length " + std::to_string(m) +
                            " exceeds the maximum of " +
                            std::to_string(kMaxWordLength));
  }
  index_space(a, m);  // range-checks q^m
}

template <typename PerWord>
CountTable fill_table(TableSpec spec, unsigned workers, PerWord per_word) {
  const std::uint64_t total = spec.entry_count();
  CountTable table{spec, std::vector<std::uint32_t>(total)};
  const std::uint64_t cap = std::min<std::uint64_t>(kMaxWorkers, std::max<std::uint64_t>(total, 1));
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, cap));

  auto run_range = [&](std::uint64_t lo, std::uint64_t count) {
    LexCursor cursor(spec.alphabet, spec.word_length, lo, count);
    while (!cursor.done()) {
      const std::uint64_t i = cursor.index();
      table.entries[i] = per_word(cursor.next());
    }
  };

  if (workers == 1) {
    run_range(0, total);
    return table;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t lo = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t count = chunk + (w < extra ? 1 : 0);
    threads.emplace_back(run_range, lo, count);
    lo += count;
  }
  for (auto& t : threads) t.join();
  return table;
}

}  // namespace

CountTable truth_table(unsigned n, Alphabet a, unsigned m, unsigned workers) {
  check_table_args(n, a, m);
  const Pattern p = zimin_pattern(n);
  return fill_table(TableSpec{n, a, m, TableKind::truth}, workers,
                    [&](const Word& w) -> std::uint32_t {
                      return encounters(w, p) ? 1 : 0;
                    });
}

CountTable density_table(unsigned n, Alphabet a, unsigned m, unsigned workers) {
  check_table_args(n, a, m);
  const Pattern p = zimin_pattern(n);
  const std::uint64_t bound = max_density_bound(n, m);
  return fill_table(TableSpec{n, a, m, TableKind::density}, workers,
                    [&](const Word& w) -> std::uint32_t {
                      const std::uint64_t d = density(w, p);
                      assert(d <= bound);
                      (void)bound;
                      return static_cast<std::uint32_t>(d);
                    });
}

std::uint64_t max_density_bound(unsigned n, unsigned m) {
  if (n < 1) throw std::out_of_range("zimin index must be at least 1");
  if (n >= 63) return 0;
  const std::uint64_t minlen = (std::uint64_t{1} << n) - 1;
  if (m < minlen) return 0;
  const std::uint64_t k = m - minlen + 1;  // occurrences of the longest lengths
  return k * (k + 1) / 2;
}

std::vector<std::uint64_t> avoider_positions(unsigned n, Alphabet a, unsigned m,
                                             unsigned workers) {
  const CountTable t = truth_table(n, a, m, workers);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < t.entries.size(); ++i) {
    if (t.entries[i] == 0) out.push_back(i);
  }
  return out;
}

std::optional<unsigned> avoidance_threshold(unsigned n, Alphabet a,
                                            unsigned limit) {
  if (limit > kMaxFrontierLength) {
    throw std::out_of_range("threshold search limited to lengths up to " +
                            std::to_string(kMaxFrontierLength));
  }
  const Pattern p = zimin_pattern(n);
  // Frontier of avoiding words, grown by prepending; a longer avoider always
  // has an avoiding suffix, so the frontier is exhaustive.
  std::vector<std::vector<Symbol>> frontier{{}};
  for (unsigned len = 1; len <= limit; ++len) {
    std::vector<std::vector<Symbol>> next;
    for (const auto& w : frontier) {
      for (Symbol s = 0; s < a.size(); ++s) {
        std::vector<Symbol> child;
        child.reserve(w.size() + 1);
        child.push_back(s);
        child.insert(child.end(), w.begin(), w.end());
        if (!encounters(std::span<const Symbol>(child), p)) {
          next.push_back(std::move(child));
        }
      }
    }
    if (next.empty()) return len;
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

void grow_frontier(FrontierNode& node, const Pattern& p, Alphabet a,
                   unsigned max_length, GrowthDirection direction) {
  node.encounters_pattern = encounters(node.word, p);
  if (node.encounters_pattern || node.word.size() >= max_length) return;
  node.children.reserve(a.size());
  for (Symbol s = 0; s < a.size(); ++s) {
    std::vector<Symbol> child;
    child.reserve(node.word.size() + 1);
    auto parent = node.word.symbols();
    if (direction == GrowthDirection::prepend) child.push_back(s);
    child.insert(child.end(), parent.begin(), parent.end());
    if (direction == GrowthDirection::append) child.push_back(s);
    node.children.push_back(FrontierNode{Word(a, child), false, {}});
    grow_frontier(node.children.back(), p, a, max_length, direction);
  }
}

}  // namespace

FrontierTree avoidance_frontier(unsigned n, Alphabet a, unsigned max_length,
                                GrowthDirection direction) {
  if (max_length > kMaxFrontierLength) {
    throw std::out_of_range("frontier depth limited to " +
                            std::to_string(kMaxFrontierLength));
  }
  const Pattern p = zimin_pattern(n);
  FrontierTree tree{n, a, max_length, direction,
                    FrontierNode{Word(a, std::span<const Symbol>{}), false, {}}};
  grow_frontier(tree.root, p, a, max_length, direction);
  return tree;
}

std::vector<Symbol> truth_symbols(const CountTable& t) {
  if (t.spec.kind != TableKind::truth) {
    throw std::invalid_argument("table word is defined for truth tables only");
  }
  std::vector<Symbol> out;
  out.reserve(t.entries.size());
  for (std::uint32_t e : t.entries) {
    assert(e <= 1);
    out.push_back(static_cast<Symbol>(e));
  }
  return out;
}

std::vector<std::uint64_t> one_positions(const CountTable& t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < t.entries.size(); ++i) {
    if (t.entries[i] != 0) out.push_back(i);
  }
  return out;
}

std::string table_digits(const CountTable& t) {
  std::string out;
  if (t.spec.kind == TableKind::truth) {
    out.reserve(t.entries.size());
    for (std::uint32_t e : t.entries) out.push_back(e ? '1' : '0');
    return out;
  }
  for (std::uint64_t i = 0; i < t.entries.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(t.entries[i]);
  }
  return out;
}

}  // namespace zimin
