#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "crossint/element_set.hpp"
#include "crossint/family_io.hpp"
#include "crossint/set_family.hpp"
#include "crossint/subsets.hpp"

using namespace crossint;

TEST_CASE("ElementSet encoding") {
  ElementSet s = ElementSet::from_elements({1, 3}, 4);
  CHECK(s.mask() == 0b0101);
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK(!s.contains(2));
  CHECK(ElementSet::from_elements({}, 5).size() == 0);
  CHECK(ElementSet::from_elements({1, 2, 3}, 3).mask() == 0b111);
  CHECK_THROWS_AS(ElementSet::from_elements({0}, 3), PreconditionError);
  CHECK_THROWS_AS(ElementSet::from_elements({4}, 3), PreconditionError);
  CHECK_THROWS_AS(ElementSet::from_elements({2, 2}, 3), PreconditionError);
  CHECK(ElementSet::from_elements({2, 5}, 6).str() == "{2,5}");
}

TEST_CASE("lex order on k-subsets") {
  std::vector<std::vector<int>> got;
  for_each_k_subset(4, 2, [&](std::uint64_t m) {
    got.push_back(ElementSet::from_mask(m, 4).elements());
  });
  std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 4},
                                          {2, 3}, {2, 4}, {3, 4}};
  CHECK(got == expect);

  got.clear();
  for_each_k_subset(3, 3, [&](std::uint64_t m) {
    got.push_back(ElementSet::from_mask(m, 3).elements());
  });
  CHECK(got == std::vector<std::vector<int>>{{1, 2, 3}});

  int count = 0;
  for_each_k_subset(3, 5, [&](std::uint64_t) { ++count; });
  CHECK(count == 0);  // k > n: empty stream
}

TEST_CASE("enumeration order equals sorting by the lex comparator") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint64_t> enumerated = all_k_subsets(n, k);
      std::vector<std::uint64_t> sorted = enumerated;
      std::sort(sorted.begin(), sorted.end(), lex_less);
      CHECK(enumerated == sorted);
      CHECK(enumerated.size() == layer_size(n, k));
    }
  }
}

TEST_CASE("rank of {2,4} among 2-subsets of [5]") {
  // independent oracle: enumerate and index
  std::vector<std::uint64_t> layer = all_k_subsets(5, 2);
  std::uint64_t target = ElementSet::from_elements({2, 4}, 5).mask();
  auto it = std::find(layer.begin(), layer.end(), target);
  REQUIRE(it != layer.end());
  std::uint64_t expected = static_cast<std::uint64_t>(it - layer.begin());
  CHECK(expected == 5);
  CHECK(lex_rank(5, 2, target) == expected);
  CHECK(lex_unrank(5, 2, 5) == target);
}

TEST_CASE("rank and unrank are mutually inverse up to n=12") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t idx = 0;
      for_each_k_subset(n, k, [&](std::uint64_t m) {
        CHECK(lex_rank(n, k, m) == idx);
        CHECK(lex_unrank(n, k, idx) == m);
        ++idx;
      });
    }
  }
}

TEST_CASE("SetFamily construction invariants") {
  SetFamily fam = SetFamily::from_lists(4, 2, {{2, 3}, {1, 2}, {2, 3}});
  CHECK(fam.size() == 2);  // duplicates removed
  CHECK(fam.member(0).elements() == std::vector<int>{1, 2});
  CHECK(fam.contains(ElementSet::from_elements({2, 3}, 4).mask()));
  CHECK(!fam.contains(ElementSet::from_elements({1, 4}, 4).mask()));
  CHECK_THROWS_AS(SetFamily::from_lists(4, 2, {{1, 2, 3}}), PreconditionError);
  CHECK_THROWS_AS(SetFamily::make(65, 2, {}), PreconditionError);
}

TEST_CASE("link and deletion split") {
  SetFamily fam = SetFamily::from_lists(3, 2, {{1, 2}, {2, 3}, {1, 3}});
  LinkDeletion parts = link_and_deletion(fam, 3);
  CHECK(parts.link == SetFamily::from_lists(2, 1, {{1}, {2}}));
  CHECK(parts.deletion == SetFamily::from_lists(2, 2, {{1, 2}}));

  LinkDeletion empty_parts = link_and_deletion(SetFamily::empty(4, 2), 2);
  CHECK(empty_parts.link.is_empty());
  CHECK(empty_parts.deletion.is_empty());

  SetFamily layer = SetFamily::make(4, 2, all_k_subsets(4, 2));
  LinkDeletion layer_parts = link_and_deletion(layer, 4);
  CHECK(layer_parts.link.size() == 3);
  CHECK(layer_parts.deletion.size() == 3);
  CHECK(layer_parts.link.size() + layer_parts.deletion.size() == layer.size());

  CHECK_THROWS_AS(link_and_deletion(fam, 0), PreconditionError);
  CHECK_THROWS_AS(link_and_deletion(fam, 4), PreconditionError);
}

TEST_CASE("partition property |F(i)| + |F(~i)| = |F| on random families") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    int k = 1 + static_cast<int>(rng() % n);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : all_k_subsets(n, k)) {
      if (rng() % 3 == 0) masks.push_back(m);
    }
    SetFamily fam = SetFamily::make(n, k, masks);
    int i = 1 + static_cast<int>(rng() % n);
    LinkDeletion parts = link_and_deletion(fam, i);
    CHECK(parts.link.size() + parts.deletion.size() == fam.size());
  }
}

TEST_CASE("family text format round-trips") {
  SetFamily fam = SetFamily::from_lists(5, 2, {{1, 3}, {2, 5}, {1, 2}});
  std::string text = family_to_text(fam);
  CHECK(text == "n=5 k=2\n1,2\n1,3\n2,5\n");
  CHECK(family_from_text(text) == fam);

  SetFamily empty = SetFamily::empty(7, 3);
  CHECK(family_from_text(family_to_text(empty)) == empty);

  CHECK_THROWS_AS(family_from_text("nonsense"), PreconditionError);
  CHECK_THROWS_AS(family_from_text("n=4 k=2\n1,9\n"), PreconditionError);
}

TEST_CASE("family text round-trip on random families") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 2 + static_cast<int>(rng() % 9);
    int k = 1 + static_cast<int>(rng() % n);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : all_k_subsets(n, k)) {
      if (rng() % 2 == 0) masks.push_back(m);
    }
    SetFamily fam = SetFamily::make(n, k, masks);
    CHECK(family_from_text(family_to_text(fam)) == fam);
  }
}
