// Acceptance suite: one criterion per run line, each with a wall-clock
// budget. Run with no arguments for all criteria, or pass criterion numbers
// (or "smoke") to select.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "test_util.hpp"
#include "zimin/instances.hpp"
#include "zimin/match.hpp"
#include "zimin/reconcile.hpp"
#include "zimin/selfref.hpp"
#include "zimin/table.hpp"
#include "zimin/table_io.hpp"

using namespace zimin;
using zimin::testutil::digits;
using zimin::testutil::each_word;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

template <typename T, typename U>
void require_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    throw CheckFailure(msg.str());
  }
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

void golden_truth_tables() {
  require_eq(table_digits(truth_table(2, Alphabet(2), 3)),
             std::string("10100101"), "truth table n=2 q=2 m=3");
  require_eq(table_digits(truth_table(2, Alphabet(2), 4)),
             std::string("1110111111110111"), "truth table n=2 q=2 m=4");
}

void instance_counting() {
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned q = 2; q <= 3; ++q) cases.emplace_back(n, q);
  cases.emplace_back(4, 2);
  for (auto [n, q] : cases) {
    const Alphabet a(q);
    const auto set = instances(n, a);
    require_eq(set.words.size(), *checked_pow(q, n),
               "instance count at n=" + std::to_string(n) + " q=" +
                   std::to_string(q));
    std::size_t i = 0;
    for (LexCursor cur = enumerate(a, (1u << n) - 1); !cur.done();) {
      const Word w = cur.next();
      if (is_zimin_instance(w, n)) {
        require(i < set.words.size() && set.words[i] == w,
                "generated set misses " + w.str());
        ++i;
      }
    }
    require_eq(i, set.words.size(),
               "exhaustive filter size at n=" + std::to_string(n) + " q=" +
                   std::to_string(q));
  }
}

void main_theorem() {
  std::vector<std::pair<unsigned, unsigned>> cases = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (auto [n, q] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_self_reference(n, Alphabet(q));
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    require(r.witness.reproduces(zimin_pattern(n + 1), truth_symbols(r.table)),
            "witness reproduction at n=" + std::to_string(n));
    const auto limit = (n == 4) ? 60000 : 5000;
    require(elapsed < limit, "self-reference at n=" + std::to_string(n) +
                                 " q=" + std::to_string(q) + " took " +
                                 std::to_string(elapsed) + " ms");
  }
}

void extension() {
  const auto r22 = verify_extension(2, Alphabet(2));
  require_eq(table_digits(r22.table).substr(0, 7), std::string("1110111"),
             "outer border of the n=2 q=2 decomposition");
  require_eq(digits(r22.witness.apply(zimin_pattern(3))),
             std::string("1110111"), "witness outer border");
  verify_extension(2, Alphabet(3));
  verify_extension(3, Alphabet(2));
}

void gap_laws() {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned q = 2; q <= 3; ++q) {
      const Alphabet a(q);
      const auto set = instances(n, a);
      for (const Word& u : set.words) {
        const auto children = generate(u);
        for (std::size_t s = 0; s + 1 < children.size(); ++s) {
          require_eq(lex_index(children[s + 1]) - lex_index(children[s]),
                     family_gap(u), "family gap under " + u.str());
        }
      }
      for (std::size_t i = 0; i + 1 < set.words.size(); ++i) {
        const Word& u = set.words[i];
        const Word& v = set.words[i + 1];
        const std::uint64_t direct =
            lex_index(generate(v).front()) - lex_index(generate(u).back());
        require_eq(cross_gap(u, v), direct,
                   "cross gap between " + u.str() + " and " + v.str());
      }
    }
  }
  const Alphabet b3(3);
  const std::uint64_t psi =
      cross_gap(Word::parse(b3, "010"), Word::parse(b3, "020"));
  const std::uint64_t direct = lex_index(Word::parse(b3, "0200020")) -
                               lex_index(Word::parse(b3, "0102010"));
  require_eq(psi, direct, "ternary cross-gap example");
}

void oracle_equivalence() {
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 12; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        if (is_zimin_instance(w, n) != oracle::is_instance(w, p)) {
          throw CheckFailure("binary disagreement at n=" + std::to_string(n) +
                             " word " + digits(w));
        }
      });
    }
  }
  for (unsigned n = 1; n <= 2; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 8; ++len) {
      each_word(3, len, [&](std::span<const Symbol> w) {
        if (is_zimin_instance(w, n) != oracle::is_instance(w, p)) {
          throw CheckFailure("ternary disagreement at n=" + std::to_string(n) +
                             " word " + digits(w));
        }
      });
    }
  }
}

void density_reconciliation() {
  const Alphabet b2(2);
  const auto table = density_table(2, b2, 4);
  const Pattern p = zimin_pattern(2);
  for (std::uint64_t i = 0; i < table.entries.size(); ++i) {
    const Word w = word_from_index(i, b2, 4);
    require_eq(static_cast<std::uint64_t>(table.entries[i]),
               oracle::density(w.symbols(), p),
               "density entry for " + w.str());
  }
  const auto r = reconcile_published_density_row();
  require(r.mismatches == std::vector<std::size_t>{5, 10},
          "mismatch set is not exactly {5, 10}");
  require(r.zeroes == std::vector<std::size_t>{3, 12},
          "zero set is not exactly {3, 12}");
  require_eq(r.observed_max, 3u, "max density entry");
  require_eq(r.corrected_bound, 3u, "corrected bound");
  require_eq(r.published_bound, 1u, "published closed form value");
  const std::string report = render_reconciliation(r);
  require(report.find("mismatches at indices 5") != std::string::npos &&
              report.find("10 (1010") != std::string::npos,
          "report does not flag indices 5 and 10");
  require(report.find("published closed form evaluates to 1") !=
              std::string::npos,
          "report does not flag the published bound");
}

void collapse_threshold() {
  const auto t = avoidance_threshold(2, Alphabet(2), 20);
  require(t.has_value(), "no collapse found");
  require_eq(*t, 5u, "collapse threshold for n=2 q=2");
  const auto table = truth_table(2, Alphabet(2), 5);
  require_eq(one_positions(table).size(), table.entries.size(),
             "length-5 truth table is not all ones");
}

void monotonicity() {
  // exhaustive over binary words with |wx| <= 10
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned wl = 1; wl <= 9; ++wl) {
      for (unsigned xl = 1; wl + xl <= 10; ++xl) {
        each_word(2, wl, [&](std::span<const Symbol> w) {
          const auto base = density(w, p);
          each_word(2, xl, [&](std::span<const Symbol> x) {
            std::vector<Symbol> wx(w.begin(), w.end());
            wx.insert(wx.end(), x.begin(), x.end());
            std::vector<Symbol> xw(x.begin(), x.end());
            xw.insert(xw.end(), w.begin(), w.end());
            if (density(wx, p) < base || density(xw, p) < base) {
              throw CheckFailure("density dropped when growing " + digits(w));
            }
          });
        });
      }
    }
  }
  // ten thousand random cases over mixed alphabets
  std::mt19937 rng(20240811);
  for (int i = 0; i < 10000; ++i) {
    const unsigned q = 2 + rng() % 3;
    const unsigned n = 1 + rng() % 3;
    const unsigned wl = 1 + rng() % 10;
    const unsigned xl = 1 + rng() % 6;
    std::vector<Symbol> w(wl), x(xl);
    for (auto& s : w) s = static_cast<Symbol>(rng() % q);
    for (auto& s : x) s = static_cast<Symbol>(rng() % q);
    const Pattern p = zimin_pattern(n);
    const auto base = density(w, p);
    std::vector<Symbol> wx(w);
    wx.insert(wx.end(), x.begin(), x.end());
    std::vector<Symbol> xw(x);
    xw.insert(xw.end(), w.begin(), w.end());
    if (density(wx, p) < base || density(xw, p) < base) {
      throw CheckFailure("density dropped on random case " + digits(w) + " + " +
                         digits(x) + " at n=" + std::to_string(n));
    }
  }
}

void serialization() {
  const Alphabet b2(2);
  for (const CountTable& t : {truth_table(2, b2, 3), truth_table(2, b2, 4),
                              density_table(2, b2, 4), density_table(3, b2, 7)}) {
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    write_table(t, buf);
    const CountTable back = read_table(buf);
    require(back.spec == t.spec && back.entries == t.entries,
            "round trip changed the table");
  }
  std::ostringstream img(std::ios::binary);
  render_raster(density_table(2, b2, 4), img, 1);
  const std::string bytes = img.str();
  require(bytes.rfind("P5\n4 4\n255\n", 0) == 0, "pgm header for a 4x4 table");
  std::set<unsigned char> levels(bytes.begin() + 11, bytes.end());
  require(levels == std::set<unsigned char>{0, 85, 170, 255},
          "grey levels of the density raster");
}

void large_table_smoke() {
  const auto table = density_table(2, Alphabet(2), 15, 4);
  require_eq(table.entries.size(), std::size_t{32768}, "smoke table size");
  std::ostringstream img(std::ios::binary);
  render_raster(table, img, 1);
  require(img.str().rfind("P5\n256 128\n255\n", 0) == 0,
          "smoke raster header");
  require_eq(img.str().size(), std::string("P5\n256 128\n255\n").size() + 32768,
             "smoke raster size");
}

struct Criterion {
  std::string id;
  std::string title;
  long budget_ms;
  std::function<void()> run;
};

const std::vector<Criterion> kCriteria = {
    {"1", "golden truth tables", 1000, golden_truth_tables},
    {"2", "counting and generation of minimal instances", 10000, instance_counting},
    {"3", "self-referential truth tables", 65000, main_theorem},
    {"4", "extension to one past the minimal length", 30000, extension},
    {"5", "family and cross gap laws", 5000, gap_laws},
    {"6", "fast checker vs composition oracle", 120000, oracle_equivalence},
    {"7", "density row reconciliation", 10000, density_reconciliation},
    {"8", "collapse threshold", 1000, collapse_threshold},
    {"9", "density monotonicity under growth", 60000, monotonicity},
    {"10", "serialization round trip and raster structure", 10000, serialization},
    {"smoke", "large density table and raster", 60000, large_table_smoke},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> selected(argv + 1, argv + argc);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (error.empty() && ms >= c.budget_ms) {
      error = "exceeded the " + std::to_string(c.budget_ms) + " ms budget";
    }
    if (error.empty()) {
      std::cout << "PASS  " << c.id << "  " << c.title << "  (" << ms
                << " ms)\n";
    } else {
      std::cout << "FAIL  " << c.id << "  " << c.title << "  (" << ms
                << " ms): " << error << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
