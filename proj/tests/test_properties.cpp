#include <bit>
#include <random>

#include "doctest.h"

#include "crossint/constructions.hpp"
#include "crossint/properties.hpp"
#include "crossint/shifting.hpp"
#include "crossint/subsets.hpp"

using namespace crossint;

TEST_CASE("t-intersecting") {
  SetFamily layer32 = SetFamily::make(3, 2, all_k_subsets(3, 2));
  CHECK(is_t_intersecting(layer32, 1));
  CHECK(!is_t_intersecting(SetFamily::from_lists(4, 2, {{1, 2}, {3, 4}}), 1));

  // any two 3-subsets of [5] meet; confirmed by the exhaustive pair scan
  SetFamily layer53 = SetFamily::make(5, 3, all_k_subsets(5, 3));
  bool all_pairs_meet = true;
  for (std::uint64_t a : layer53.masks()) {
    for (std::uint64_t b : layer53.masks()) {
      if ((a & b) == 0) all_pairs_meet = false;
    }
  }
  CHECK(all_pairs_meet);
  CHECK(is_t_intersecting(layer53, 1));

  CHECK(is_t_intersecting(SetFamily::empty(4, 2), 3));
  CHECK(is_t_intersecting(SetFamily::from_lists(4, 2, {{1, 2}}), 2));
  CHECK(is_t_intersecting(layer32, 0));

  auto viol = find_t_violation(SetFamily::from_lists(4, 2, {{1, 2}, {3, 4}}), 1);
  REQUIRE(viol.has_value());
  CHECK(viol->first == ElementSet::from_elements({1, 2}, 4).mask());
  CHECK(viol->second == ElementSet::from_elements({3, 4}, 4).mask());
}

TEST_CASE("t-intersecting monotone in t") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : all_k_subsets(n, k)) {
      if (rng() % 3 == 0) masks.push_back(m);
    }
    SetFamily fam = SetFamily::make(n, k, masks);
    for (int t = k; t >= 1; --t) {
      if (is_t_intersecting(fam, t)) CHECK(is_t_intersecting(fam, t - 1));
    }
  }
}

TEST_CASE("parallel predicates match the serial references") {
  std::mt19937_64 rng(0xfeed);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 7);
    int k = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::vector<std::uint64_t> ma, mb;
    for (std::uint64_t m : all_k_subsets(n, k)) {
      if (rng() % 2 == 0) ma.push_back(m);
      if (rng() % 2 == 0) mb.push_back(m);
    }
    SetFamily a = SetFamily::make(n, k, ma);
    SetFamily b = SetFamily::make(n, k, mb);
    for (int t = 0; t <= 2; ++t) {
      CHECK(is_t_intersecting(a, t) == serial::is_t_intersecting(a, t));
    }
    CHECK(are_cross_intersecting(a, b) == serial::are_cross_intersecting(a, b));
  }
}

TEST_CASE("cross-intersecting") {
  CHECK(are_cross_intersecting(SetFamily::from_lists(3, 2, {{1, 2}}),
                               SetFamily::from_lists(3, 2, {{1, 3}, {2, 3}})));
  CHECK(!are_cross_intersecting(SetFamily::from_lists(4, 2, {{1, 2}}),
                                SetFamily::from_lists(4, 2, {{3, 4}})));
  CHECK(are_cross_intersecting(SetFamily::empty(4, 2),
                               SetFamily::from_lists(4, 2, {{1, 2}})));
  CHECK_THROWS_AS(are_cross_intersecting(SetFamily::empty(4, 2),
                                         SetFamily::empty(5, 2)),
                  PreconditionError);

  // the extremal pair at (n,k,t,s) = (6,2,0,1): all 3x3 pairs meet
  SetFamily f0 = make_f0(6, 2, 0, 1);
  SetFamily g0 = make_g0(6, 2, 0, 1);
  CHECK(f0.size() == 3);
  CHECK(g0.size() == 3);
  CHECK(are_cross_intersecting(f0, g0));
}

TEST_CASE("clique containment") {
  SetFamily clique = make_clique(5, 2, 3);
  CHECK(contains_clique(clique, 3));

  std::vector<std::uint64_t> masks = clique.masks();
  masks.erase(std::find(masks.begin(), masks.end(),
                        ElementSet::from_elements({2, 3}, 5).mask()));
  SetFamily holed = SetFamily::make(5, 2, masks);
  CHECK(!contains_clique(holed, 3));
  auto missing = find_missing_clique_member(holed, 3);
  REQUIRE(missing.has_value());
  CHECK(*missing == ElementSet::from_elements({2, 3}, 5).mask());

  // F0 at (k,t,s)=(2,1,1) is the full (k+t)-layer of [k+t+s]=[4]
  SetFamily f0 = make_f0(8, 2, 1, 1);
  CHECK(contains_clique(f0, 4));
  CHECK_THROWS_AS(contains_clique(f0, 2), PreconditionError);  // m < k
}

TEST_CASE("star detection") {
  CHECK(is_star_subfamily(SetFamily::from_lists(3, 2, {{1, 2}, {1, 3}})) == 1);
  CHECK(!is_star_subfamily(SetFamily::make(3, 2, all_k_subsets(3, 2))));
  CHECK(is_star_subfamily(make_star(5, 2, 3)) == 3);
  CHECK(is_star_subfamily(SetFamily::empty(4, 2)) == 1);  // convention
}

TEST_CASE("trace profile") {
  SetFamily f0 = make_f0(6, 2, 0, 1);  // lives inside [3]
  CHECK(trace_profile(f0, 3) == 2);
  CHECK(trace_profile(SetFamily::from_lists(5, 2, {{1, 5}, {2, 3}}), 3) == 1);
  CHECK_THROWS_AS(trace_profile(SetFamily::empty(4, 2), 2), PreconditionError);
  CHECK_THROWS_AS(trace_profile(f0, 0), PreconditionError);
  CHECK_THROWS_AS(trace_profile(f0, 7), PreconditionError);
}

// Under the clique hypothesis no member can have a small trace: adding any
// (k+t)-set with trace <= t+s on [k+t+s] breaks (t+1)-intersection with some
// clique member, and any k-set with trace <= s misses some clique member
// entirely. Checked member-wise over a small grid; this justifies the
// candidate pruning used by the constrained searches.
TEST_CASE("low-trace sets are incompatible with the clique hypothesis") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= 4; ++k) {
      for (int t = 0; k + t <= 4; ++t) {
        for (int s = 0; s <= k - 1; ++s) {
          int m = k + t + s;
          if (m > n || n < 2 * k + t) continue;
          SetFamily clique = make_clique(n, k + t, m);
          std::uint64_t pm = prefix_mask(m);
          for (std::uint64_t a : all_k_subsets(n, k + t)) {
            if (std::popcount(a & pm) > t + s) continue;
            bool conflicts = false;
            for (std::uint64_t c : clique.masks()) {
              if (std::popcount(a & c) < t + 1) conflicts = true;
            }
            CHECK(conflicts);
          }
          for (std::uint64_t b : all_k_subsets(n, k)) {
            if (std::popcount(b & pm) > s) continue;
            bool missed = false;
            for (std::uint64_t c : clique.masks()) {
              if ((b & c) == 0) missed = true;
            }
            CHECK(missed);
          }
        }
      }
    }
  }
}

// Same member-wise statement for the intersecting-with-clique hypothesis on
// the l-side: low trace on [l+s] forces a disjoint clique member.
TEST_CASE("low-trace sets are incompatible with an intersecting clique family") {
  for (int n = 3; n <= 8; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (int s = 0; s <= l - 1; ++s) {
        for (int k = l; k <= 4; ++k) {
          if (n < k + l || l + s > n) continue;
          SetFamily clique = make_clique(n, l, l + s);
          std::uint64_t pm = prefix_mask(l + s);
          for (std::uint64_t a : all_k_subsets(n, k)) {
            if (std::popcount(a & pm) > s) continue;
            bool missed = false;
            for (std::uint64_t c : clique.masks()) {
              if ((a & c) == 0) missed = true;
            }
            CHECK(missed);
          }
        }
      }
    }
  }
}

// At (n,k,t,s) = (6,2,0,1) the hypotheses force F to be exactly the clique;
// exhausting every conforming pair shows both trace conclusions.
TEST_CASE("trace conclusions by exhausting the tiny cell (6,2,0,1)") {
  const int n = 6, k = 2, t = 0, s = 1;
  SetFamily clique = make_clique(n, k + t, k + t + s);
  std::vector<std::uint64_t> rest;
  for (std::uint64_t a : all_k_subsets(n, k + t)) {
    if (!clique.contains(a)) rest.push_back(a);
  }
  REQUIRE(rest.size() == 12);
  int families_checked = 0;
  for (unsigned sel = 0; sel < (1u << rest.size()); ++sel) {
    std::vector<std::uint64_t> masks = clique.masks();
    for (std::size_t b = 0; b < rest.size(); ++b) {
      if (sel >> b & 1) masks.push_back(rest[b]);
    }
    SetFamily f = SetFamily::make(n, k + t, masks);
    if (!is_t_intersecting(f, t + 1)) continue;
    ++families_checked;
    CHECK(trace_profile(f, k + t + s) >= t + s + 1);
    SetFamily partner = companion(f, k);
    for (std::uint64_t b : partner.masks()) {
      CHECK(std::popcount(b & prefix_mask(k + t + s)) >=
            static_cast<int>(s + 1));
    }
  }
  CHECK(families_checked > 0);
}

// Link families of a shifted cross-intersecting pair stay cross-intersecting,
// and an l-intersecting F keeps the level in its link when n > 2k+t.
TEST_CASE("link families of shifted pairs keep their properties") {
  std::mt19937_64 rng(0x1e37);
  int link_checks = 0, level_checks = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int k = 2 + static_cast<int>(rng() % 2);
    int t = static_cast<int>(rng() % 2);
    int n = 2 * k + t + static_cast<int>(rng() % 3);
    if (n > 10) continue;

    std::vector<std::uint64_t> fm;
    for (std::uint64_t m : all_k_subsets(n, k + t)) {
      if (rng() % 3 == 0) fm.push_back(m);
    }
    SetFamily f = SetFamily::make(n, k + t, fm);
    SetFamily comp = companion(f, k);
    std::vector<std::uint64_t> gm;
    for (std::uint64_t m : comp.masks()) {
      if (rng() % 2 == 0) gm.push_back(m);
    }
    SetFamily g = SetFamily::make(n, k, gm);
    auto [cf, cg] = shift_pair_to_canonical(f, g);

    LinkDeletion fp = link_and_deletion(cf, n);
    LinkDeletion gp = link_and_deletion(cg, n);
    ++link_checks;
    CHECK(are_cross_intersecting(fp.link, gp.link));

    if (n > 2 * k + t) {
      for (int level = t; level <= k + t; ++level) {
        if (is_t_intersecting(cf, level)) {
          ++level_checks;
          CHECK(is_t_intersecting(fp.link, level));
        }
      }
    }
  }
  CHECK(link_checks > 50);
  CHECK(level_checks > 20);
}
