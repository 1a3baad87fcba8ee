#include "flowvol/dyck.hpp"

#include "flowvol/closed_forms.hpp"

#include <doctest.h>

using namespace flowvol;

namespace {
std::vector<std::string> texts(const auto &words) {
  std::vector<std::string> out;
  for (const auto &w : words) {
    out.push_back(w.to_string());
  }
  return out;
}
} // namespace

TEST_SUITE("dyck-paths") {
  TEST_CASE("parsing") {
    const auto w = parse_labeled_word("UD0UUUUD5UD3D0UUUD4D2D0D0UD1D1", 5);
    CHECK(w.n() == 10);
    CHECK(w.zero_count() == 4);
    const auto d = parse_doubly_labeled_word("UD0UD1|1,1,1", 1);
    CHECK(d.extra() == std::vector<int>{1, 1, 1});
    CHECK(std::holds_alternative<DoublyLabeledDyckWord>(parse_word("UD0UD1|1,1,1", 1)));
    CHECK(parse_labeled_word("UUD1D0", 1).to_string() == "UUD1D0");
    CHECK(parse_labeled_word("UD12", 12).steps().back() == Step::down(12));
  }

  TEST_CASE("invalid words report positions") {
    auto position_of = [](const char *text, int k) -> std::size_t {
      try {
        parse_labeled_word(text, k);
      } catch (const WordError &e) {
        return e.position();
      }
      return 99;
    };
    CHECK(position_of("UUD1D2", 2) == 4);
    CHECK(position_of("UUD0D1", 1) == 4);
    CHECK(position_of("UD1D1", 1) == 3);
    CHECK(position_of("UD3", 2) == 2);
    CHECK(position_of("UXD0", 1) == 2);
    CHECK_THROWS_AS(parse_doubly_labeled_word("UD0UD1|1,1", 1), WordError);
    CHECK_THROWS_AS(parse_doubly_labeled_word("UD0UD1|2,1,2", 2), WordError);
  }

  TEST_CASE("labeled word enumeration") {
    CHECK(texts(enumerate_ld(2, 1, LabelFilter::zeros(0))) ==
          std::vector<std::string>{"UD1UD1", "UUD1D1"});
    CHECK(texts(enumerate_ld(1, 2, LabelFilter::zeros(1))) == std::vector<std::string>{"UD0"});
    CHECK(count_ld(3, 3, LabelFilter::composition({0, 1, 1, 1})) == 16);
    CHECK(count_ld(0, 2) == 1);
    CHECK(enumerate_ld(0, 2).front().to_string().empty());
  }

  TEST_CASE("doubly labeled enumeration") {
    CHECK(count_dld(2, 1) == 7);
    CHECK(count_dld(1, 1) == 2);
    CHECK(count_dld(0, 3) == 1);
    CHECK(texts(enumerate_dld(1, 1)) == std::vector<std::string>{"UD0|1,1", "UD1|1"});
  }

  TEST_CASE("prefix enumeration") {
    CHECK(texts(enumerate_prefixes(2, 1, 1, {1, 0})) == std::vector<std::string>{"UD0U", "UUD0"});
    CHECK(texts(enumerate_prefixes(2, 2, 1, {0, 0})) == std::vector<std::string>{"UU"});
    CHECK(count_prefixes(3, 1, 2, {1, 1, 0}) == 8);
    CHECK_THROWS(count_prefixes(3, 1, 2, {1, 1}));
  }

  TEST_CASE("run-constrained Dyck paths") {
    CHECK(enumerate_min_constrained(2, {0, 0}) == 2);
    CHECK(enumerate_min_constrained(2, {1, 1}) == 1);
    CHECK(enumerate_min_constrained(3, {0, 1, 0}) == 3);
  }

  TEST_CASE("counts match closed forms") {
    for (int n = 0; n <= 5; ++n) {
      for (int k = 1; k <= 3; ++k) {
        for (int d = 0; d <= n; ++d) {
          CHECK(count_ld(n, k, LabelFilter::zeros(d)) == ld_count_by_zeros(n, k, d));
        }
        for (const auto &c : weak_compositions(n, k + 1)) {
          CHECK(count_ld(n, k, LabelFilter::composition(c)) == ld_count_closed(n, k, c));
        }
        CHECK(count_dld(n, k) == dld_count_via_sum(n, k));
      }
    }
  }

  TEST_CASE("serialization round trip") {
    for (const auto &w : enumerate_ld(4, 2)) {
      CHECK(parse_labeled_word(w.to_string(), 2) == w);
      CHECK(word_of_path(path_of_word(w), 2) == w);
    }
    for (const auto &w : enumerate_dld(3, 2)) {
      CHECK(parse_doubly_labeled_word(w.to_string(), 2) == w);
    }
  }

  TEST_CASE("lattice path form") {
    const auto w = parse_labeled_word("UUD1D0", 1);
    const LatticePath p = path_of_word(w);
    CHECK(p.points == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {3, 1}, {4, 0}});
    CHECK(p.down_labels == std::vector<int>{1, 0});
    CHECK(word_of_path(LatticePath{{{0, 0}}, {}}, 1).to_string().empty());
  }

  TEST_CASE("weak compositions") {
    CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(weak_compositions(0, 0).size() == 1);
    CHECK(weak_compositions(3, 4).size() == 20);
  }
}
