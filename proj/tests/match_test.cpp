#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "test_util.hpp"
#include "zimin/match.hpp"

using namespace zimin;
using zimin::testutil::digits;
using zimin::testutil::each_word;
using zimin::testutil::syms;

TEST_CASE("find_witness returns the canonical morphism") {
  SUBCASE("four distinct symbols against a two-variable pattern") {
    auto wit = find_witness(syms("ABCD"), Pattern::parse("12"));
    REQUIRE(wit);
    CHECK(digits(wit->images[0]) == "A");
    CHECK(digits(wit->images[1]) == "BCD");
  }
  SUBCASE("0110 is an instance of the second zimin pattern") {
    auto wit = find_witness(syms("0110"), zimin_pattern(2));
    REQUIRE(wit);
    CHECK(digits(wit->images[0]) == "0");
    CHECK(digits(wit->images[1]) == "11");
  }
  SUBCASE("0011 is not") {
    CHECK(!find_witness(syms("0011"), zimin_pattern(2)));
  }
  SUBCASE("empty and too-short words") {
    CHECK(!find_witness(std::span<const Symbol>{}, Pattern::parse("0")));
    CHECK(!find_witness(syms("01"), Pattern::parse("010")));
  }
}

TEST_CASE("encounter checks") {
  CHECK(encounters(syms("0000"), zimin_pattern(2)));
  CHECK(!encounters(syms("0011"), zimin_pattern(2)));
  CHECK(!encounters(syms("1100"), zimin_pattern(2)));
  CHECK(encounters(syms("0"), zimin_pattern(1)));
  CHECK(encounters(syms("1"), zimin_pattern(1)));
  CHECK(!encounters(std::span<const Symbol>{}, zimin_pattern(1)));
}

TEST_CASE("find_encounter reports the first occurrence in scan order") {
  auto occ = find_encounter(syms("0001"), zimin_pattern(2));
  REQUIRE(occ);
  CHECK(occ->start == 0);
  CHECK(occ->end == 2);
  CHECK(digits(occ->witness.images[0]) == "0");
  CHECK(digits(occ->witness.images[1]) == "0");
  CHECK(!find_encounter(syms("0011"), zimin_pattern(2)));
  auto two = find_encounter(syms("0110"), Pattern::parse("01"));
  REQUIRE(two);
  CHECK(two->start == 0);
  CHECK(two->end == 1);
}

TEST_CASE("density counts position-distinct occurrences") {
  const auto w = syms("0110");
  CHECK(density(w, zimin_pattern(1)) == 10);
  CHECK(density(w, Pattern::parse("01")) == 6);
  CHECK(density(w, zimin_pattern(2)) == 1);
  CHECK(density(syms("0000"), zimin_pattern(2)) == 3);
  CHECK(density(syms("01"), zimin_pattern(2)) == 0);
}

TEST_CASE("fast zimin checks") {
  CHECK(is_zimin_instance(syms("10100101"), 3));
  CHECK(is_zimin_instance(syms("0101010"), 3));
  CHECK(!is_zimin_instance(syms("11"), 2));
  CHECK(is_zimin_instance(syms("1"), 1));
  CHECK(!is_zimin_instance(std::span<const Symbol>{}, 1));
  CHECK_THROWS_AS(is_zimin_instance(syms("0"), 0), std::out_of_range);
}

TEST_CASE("zimin witness extraction reproduces the word") {
  auto wit = zimin_instance_witness(syms("10100101"), 3);
  REQUIRE(wit);
  CHECK(digits(wit->images[0]) == "1");
  CHECK(digits(wit->images[1]) == "0");
  CHECK(digits(wit->images[2]) == "00");
  CHECK(!zimin_instance_witness(syms("0011"), 2));
  each_word(2, 9, [&](std::span<const Symbol> w) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto extracted = zimin_instance_witness(w, n);
      CHECK(extracted.has_value() == is_zimin_instance(w, n));
      if (extracted) CHECK(extracted->reproduces(zimin_pattern(n), w));
    }
  });
}

TEST_CASE("unavoidability via the zimin characterization") {
  CHECK(is_unavoidable(Pattern::parse("0")));
  CHECK(is_unavoidable(Pattern::parse("010")));
  CHECK(is_unavoidable(Pattern::parse("01")));
  CHECK(!is_unavoidable(Pattern::parse("00")));    // squares are avoidable
  CHECK(!is_unavoidable(Pattern::parse("0101")));
  CHECK(!is_unavoidable(Pattern::parse("0011")));
  // 0102010 = 0|1|0|20|1|0 is itself an instance of 010210
  CHECK(is_unavoidable(Pattern::parse("010210")));
  CHECK(is_unavoidable(zimin_pattern(4)));
  CHECK_THROWS_AS(is_unavoidable(Pattern::parse("012345")), std::out_of_range);
}

TEST_CASE("fast checker agrees with the composition oracle") {
  // binary words up to length 10 here; the acceptance suite pushes to 12
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 10; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        if (is_zimin_instance(w, n) != oracle::is_instance(w, p)) {
          FAIL("disagreement at n=", n, " word=", digits(w));
        }
      });
    }
  }
}

TEST_CASE("fast checker agrees with the general morphism search") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 12; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        if (is_zimin_instance(w, n) != find_witness(w, p).has_value()) {
          FAIL("paths disagree at n=", n, " word=", digits(w));
        }
      });
    }
  }
}

TEST_CASE("find_witness agrees with the oracle witness exactly") {
  const std::vector<Pattern> patterns = {
      zimin_pattern(1), zimin_pattern(2),      zimin_pattern(3),
      Pattern::parse("01"), Pattern::parse("00"), Pattern::parse("0011"),
      Pattern::parse("0110")};
  for (const Pattern& p : patterns) {
    for (unsigned len = 0; len <= 8; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        auto mine = find_witness(w, p);
        auto ref = oracle::find_witness(w, p);
        if (mine.has_value() != ref.has_value()) {
          FAIL("presence differs for pattern ", p.str(), " word ", digits(w));
        }
        if (mine && !(mine->images == ref->images)) {
          FAIL("canonical witness differs for pattern ", p.str(), " word ",
               digits(w));
        }
      });
    }
  }
}

TEST_CASE("density agrees with the oracle") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 8; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        CHECK(density(w, p) == oracle::density(w, p));
      });
    }
  }
  const Pattern square = Pattern::parse("00");
  each_word(3, 6, [&](std::span<const Symbol> w) {
    CHECK(density(w, square) == oracle::density(w, square));
  });
}

TEST_CASE("density is positive exactly on encounters") {
  for (const Pattern& p : {zimin_pattern(2), Pattern::parse("00")}) {
    for (unsigned len = 0; len <= 8; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        CHECK((density(w, p) >= 1) == encounters(w, p));
      });
    }
  }
}

TEST_CASE("at minimal length density is the 0/1 instance flag") {
  for (unsigned n = 1; n <= 3; ++n) {
    const unsigned len = (1u << n) - 1;
    each_word(2, len, [&](std::span<const Symbol> w) {
      const auto d = density(w, zimin_pattern(n));
      CHECK(d <= 1);
      CHECK((d == 1) == is_zimin_instance(w, n));
    });
  }
  each_word(3, 3, [&](std::span<const Symbol> w) {
    CHECK(density(w, zimin_pattern(2)) ==
          (is_zimin_instance(w, 2) ? 1u : 0u));
  });
}

TEST_CASE("density never decreases when a word grows") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned wl = 1; wl <= 6; ++wl) {
      for (unsigned xl = 1; wl + xl <= 9; ++xl) {
        each_word(2, wl, [&](std::span<const Symbol> w) {
          const auto base = density(w, p);
          each_word(2, xl, [&](std::span<const Symbol> x) {
            std::vector<Symbol> wx(w.begin(), w.end());
            wx.insert(wx.end(), x.begin(), x.end());
            std::vector<Symbol> xw(x.begin(), x.end());
            xw.insert(xw.end(), w.begin(), w.end());
            CHECK(density(wx, p) >= base);
            CHECK(density(xw, p) >= base);
          });
        });
      }
    }
  }
}

TEST_CASE("density is symmetric under reversal and relabeling") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Pattern p = zimin_pattern(n);
    for (unsigned len = 0; len <= 8; ++len) {
      each_word(2, len, [&](std::span<const Symbol> w) {
        const auto d = density(w, p);
        std::vector<Symbol> rev(w.rbegin(), w.rend());
        CHECK(density(rev, p) == d);
        std::vector<Symbol> flip(w.begin(), w.end());
        for (Symbol& s : flip) s = static_cast<Symbol>(1 - s);
        CHECK(density(flip, p) == d);
      });
    }
  }
  // a ternary transposition
  each_word(3, 5, [&](std::span<const Symbol> w) {
    std::vector<Symbol> swapped(w.begin(), w.end());
    for (Symbol& s : swapped) {
      if (s == 0) s = 2;
      else if (s == 2) s = 0;
    }
    CHECK(density(swapped, zimin_pattern(2)) == density(w, zimin_pattern(2)));
  });
}
