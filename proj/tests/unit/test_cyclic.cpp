#include "flowvol/cyclic.hpp"

#include "flowvol/closed_forms.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace flowvol;

TEST_SUITE("cyclic") {
  TEST_CASE("ind on worked examples") {
    CHECK(ind(ExtendedWord::parse("UD1D0UUD1U", 1)) == 2);
    CHECK(ind(ExtendedWord::parse("U", 1)) == 1);
    CHECK(ind(ExtendedWord::parse("UUD1D0UUD1", 1)) == 3);
  }

  TEST_CASE("shift") {
    CHECK(shift(ExtendedWord::parse("UD1D0UUD1U", 1)).to_string() == "UUD1D0UUD1");
    CHECK(shift(ExtendedWord::parse("U", 1)).to_string() == "U");
    for (const ExtendedWord &w : enumerate_extended_words(2, 1)) {
      ExtendedWord v = w;
      for (int j = 0; j <= w.n(); ++j) {
        v = shift(v);
      }
      CHECK(ind(v) == ind(w));
    }
  }

  TEST_CASE("projection") {
    const Projection a = project(ExtendedWord::parse("UUD1D1U", 1));
    CHECK(a.word.to_string() == "UUD1D1");
    CHECK(a.shifts == 0);
    const Projection b = project(ExtendedWord::parse("UD1UUD1", 1));
    CHECK(b.word.to_string() == "UD1UD1");
    CHECK(b.shifts == 1);
  }

  TEST_CASE("invalid extended words") {
    CHECK_THROWS_AS(ExtendedWord::parse("D0UU", 1), WordError);
    CHECK_THROWS_AS(ExtendedWord::parse("UD0D0", 1), WordError);
    CHECK_THROWS_AS(ExtendedWord::parse("UUD0D1U", 1), WordError);
    CHECK_THROWS_AS(ExtendedWord::parse("UD0D0U", 1), WordError);
    CHECK_THROWS_AS(ExtendedWord::parse("UUD0D0", 1), WordError);
  }

  TEST_CASE("cyclic lemma and fibers") {
    for (int n = 0; n <= 4; ++n) {
      for (int k = 1; k <= 2; ++k) {
        std::map<std::string, int> fiber;
        for (const ExtendedWord &w : enumerate_extended_words(n, k)) {
          const int j = ind(w);
          CHECK((ind(shift(w)) - j - 1) % (n + 1) == 0);
          CHECK(ind_all_orders(w) == std::set<int>{j});
          const Projection p = project(w);
          CHECK((p.shifts + j) % (n + 1) == 0);
          CHECK(label_counts(p.word.steps(), k) == label_counts(w.letters(), k));
          ++fiber[p.word.to_string()];
        }
        CHECK(Integer(static_cast<unsigned long>(fiber.size())) == count_ld(n, k));
        for (const auto &[word, size] : fiber) {
          CHECK(size == n + 1);
        }
      }
    }
  }

  TEST_CASE("deletion strategies agree on random words") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      // random arrangement of n more U's and n D's after the leading U
      std::vector<bool> ups(static_cast<std::size_t>(2 * n), false);
      std::fill(ups.begin(), ups.begin() + n, true);
      std::shuffle(ups.begin(), ups.end(), rng);
      Steps letters{Step::up()};
      int cap = k;
      for (bool up : ups) {
        if (up) {
          letters.push_back(Step::up());
          cap = k;
        } else {
          cap = std::uniform_int_distribution<int>(0, cap)(rng);
          letters.push_back(Step::down(cap));
        }
      }
      const ExtendedWord w(letters, n, k);
      CAPTURE(w.to_string());
      CHECK(ind(w, DeletionOrder::leftmost) == ind(w, DeletionOrder::rightmost));
    }
  }

  TEST_CASE("index candidates") {
    CHECK(index_candidates(PrefixExtendedWord::parse("UUU", 2, 2, 1)) == std::set<int>{1, 2, 3});
    CHECK(index_candidates(PrefixExtendedWord::parse("UUD0U", 2, 1, 1)).size() == 2);
    const auto w = ExtendedWord::parse("UD1D0UUD1U", 1);
    CHECK(index_candidates(PrefixExtendedWord(w.letters(), 3, 0, 1)) == std::set<int>{ind(w)});
  }

  TEST_CASE("prefix lifting is (n+1)-to-1") {
    for (int n = 0; n <= 4; ++n) {
      for (int i = 0; i <= n; ++i) {
        std::map<std::string, int> fiber;
        for_each_prefix_extended_word(n, i, 2, [&](const Steps &letters) {
          const PrefixExtendedWord w(letters, n, i, 2);
          const auto candidates = index_candidates(w);
          CHECK(candidates.size() == static_cast<std::size_t>(i) + 1);
          for (int j : candidates) {
            ++fiber[prefix_of_lift(w, j).to_string()];
          }
        });
        Integer expected = 0;
        for (const auto &c : weak_compositions(n - i, 3)) {
          expected += prefix_count_closed(n, i, 2, c);
        }
        CHECK(Integer(static_cast<unsigned long>(fiber.size())) == expected);
        for (const auto &[word, size] : fiber) {
          CHECK(size == n + 1);
        }
      }
    }
  }
}
