#include <bit>

#include "doctest.h"

#include "crossint/bounds.hpp"
#include "crossint/constructions.hpp"
#include "crossint/properties.hpp"
#include "crossint/subsets.hpp"

using namespace crossint;

namespace {

ParamSet ps(std::optional<long long> n = {}, std::optional<long long> k = {},
            std::optional<long long> t = {}, std::optional<long long> s = {},
            std::optional<long long> l = {}, std::optional<long long> m = {}) {
  ParamSet p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.s = s;
  p.l = l;
  p.m = m;
  return p;
}

// brute-force maximum intersecting subfamily of C([n],k)
std::size_t brute_max_intersecting(int n, int k) {
  std::vector<std::uint64_t> layer = all_k_subsets(n, k);
  REQUIRE(layer.size() <= 20);
  std::size_t best = 0;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << layer.size()); ++sel) {
    bool ok = true;
    for (std::uint64_t r1 = sel; ok && r1 != 0; r1 &= r1 - 1) {
      std::uint64_t a = layer[std::countr_zero(r1)];
      for (std::uint64_t r2 = r1 & (r1 - 1); r2 != 0; r2 &= r2 - 1) {
        if ((a & layer[std::countr_zero(r2)]) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(sel)));
  }
  return best;
}

// brute-force max |F|+|G| over nonempty cross-intersecting pairs in C([n],k)
std::size_t brute_max_cross_pair(int n, int k) {
  std::vector<std::uint64_t> layer = all_k_subsets(n, k);
  REQUIRE(layer.size() <= 20);
  std::size_t best = 0;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << layer.size()); ++sel) {
    std::size_t partner = 0;
    for (std::uint64_t g : layer) {
      bool meets_all = true;
      for (std::uint64_t r = sel; r != 0; r &= r - 1) {
        if ((layer[std::countr_zero(r)] & g) == 0) {
          meets_all = false;
          break;
        }
      }
      if (meets_all) ++partner;
    }
    if (partner == 0) continue;
    best = std::max(best,
                    static_cast<std::size_t>(std::popcount(sel)) + partner);
  }
  return best;
}

}  // namespace

TEST_CASE("classic bound values") {
  // derived by brute force over all subfamilies
  CHECK(brute_max_intersecting(5, 2) == 4);
  CHECK(evaluate_formula(Formula::ekr, ps(5, 2)).as_u64() == 4);
  CHECK(brute_max_cross_pair(4, 2) == 6);
  CHECK(evaluate_formula(Formula::hm_pair, ps(4, 2)).as_u64() == 6);

  CHECK(evaluate_formula(Formula::frankl_ii, ps(7, 2, 1)).as_u64() == 16);
  CHECK(evaluate_formula(Formula::h, ps(6, 3, {}, {}, {}, 4)).as_u64() == 10);
  CHECK(evaluate_formula(Formula::hm_intersecting, ps(6, 3)).as_u64() == 10);

  CHECK_THROWS_AS(evaluate_formula(Formula::ekr, ps(3, 2)), PreconditionError);
  CHECK_THROWS_AS(evaluate_formula(Formula::h, ps(6, 3, {}, {}, {}, 7)),
                  PreconditionError);
  CHECK(!formula_from_string("no_such_formula").has_value());
}

TEST_CASE("conjecture bound values") {
  CHECK(conjecture_bound(4, 2, 0, 0).as_u64() == 6);  // collapses to C(2k+t,k)
  CHECK(conjecture_bound(4, 2, 0, 0) == binom(4, 2));
  CHECK(conjecture_bound(7, 2, 1, 0) ==
        evaluate_formula(Formula::frankl_ii, ps(7, 2, 1)));
  CHECK(conjecture_bound(6, 2, 0, 1).as_u64() == 6);
  // cross-check the tight pair by enumeration
  CHECK(make_f0(6, 2, 0, 1).size() + make_g0(6, 2, 0, 1).size() == 6);
  CHECK_THROWS_AS(conjecture_bound(5, 2, 2, 0), PreconditionError);
  CHECK_THROWS_AS(conjecture_bound(6, 2, 0, 2), PreconditionError);
}

TEST_CASE("restricted universe bound counts the trace layer") {
  CHECK(restricted_universe_bound(6, 2, 3, 1).as_u64() == 3);
  CHECK(make_restricted(6, 2, 3, 1).size() == 3);
  CHECK(restricted_universe_bound(7, 3, 4, 1).as_u64() == 22);
  CHECK(make_restricted(7, 3, 4, 1).size() == 22);

  // m = n: the subtracted sum vanishes by the zero convention
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int s = 0; s < k; ++s) {
        CHECK(restricted_universe_bound(n, k, n, s) == binom(n, k));
      }
    }
  }

  // against enumeration on a small grid
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      for (int m = 1; m <= n; ++m) {
        for (int s = 0; s < k; ++s) {
          CHECK(restricted_universe_bound(n, k, m, s).as_u64() ==
                make_restricted(n, k, m, s).size());
        }
      }
    }
  }
}

TEST_CASE("main6 bound values") {
  CHECK(main6_bound(6, 3, 2, 1).as_u64() == 13);
  // the natural pair: G = C([3],2), F = trace-restricted 3-layer
  CHECK(make_main6_G(6, 3, 2, 1).size() + make_main6_F(6, 3, 2, 1).size() == 13);
  CHECK(main6_bound(5, 3, 2, 1).as_u64() == 10);  // n = k+l collapse
  CHECK(main6_bound(5, 3, 2, 1) == binom(5, 3));
  CHECK(main6_bound(8, 2, 2, 1) == conjecture_bound(8, 2, 0, 1));  // k = l case
  CHECK_THROWS_AS(main6_bound(4, 3, 2, 1), PreconditionError);
}

TEST_CASE("corollary form of main6 at s=1") {
  for (long long l = 2; l <= 5; ++l) {
    for (long long k = l; k <= 6; ++k) {
      for (long long n = k + l; n <= k + l + 6; ++n) {
        BigNat direct = binom(n, k) + BigNat(static_cast<std::uint64_t>(l + 1));
        direct -= binom(n - l - 1, k) +
                  BigNat(static_cast<std::uint64_t>(l + 1)) * binom(n - l - 1, k - 1);
        CHECK(main6_bound(n, k, l, 1) == direct);
      }
    }
  }
}

TEST_CASE("reduction identities across a grid") {
  for (long long n = 4; n <= 24; ++n) {
    for (long long k = 1; 2 * k <= n; ++k) {
      for (long long t = 0; 2 * k + t <= n && t <= 4; ++t) {
        CHECK(conjecture_bound(n, k, t, 0) ==
              evaluate_formula(Formula::frankl_ii, ps(n, k, t)));
      }
      for (long long s = 0; s < k; ++s) {
        CHECK(main6_bound(n, k, k, s) == conjecture_bound(n, k, 0, s));
      }
      for (long long l = 2; l <= k && n >= k + l; ++l) {
        CHECK(main6_bound(n, k, l, 0) ==
              evaluate_formula(Formula::ft_pair, ps(n, k, {}, {}, l)));
      }
    }
  }
}

TEST_CASE("h-bound consistency with ekr and hm") {
  for (long long k = 2; k <= 6; ++k) {
    for (long long n = 2 * k; n <= 2 * k + 10; ++n) {
      CHECK(evaluate_formula(Formula::h, ps(n, k, {}, {}, {}, k)) ==
            evaluate_formula(Formula::ekr, ps(n, k)));
      if (k + 1 < 2 * k) {
        CHECK(evaluate_formula(Formula::h, ps(n, k, {}, {}, {}, k + 1)) ==
              evaluate_formula(Formula::hm_intersecting, ps(n, k)));
      }
    }
  }
}

TEST_CASE("tightness: |F0| + |G0| equals the conjecture bound") {
  // counts by the direct trace-split sum, plus enumeration where feasible
  for (long long n = 2; n <= 40; ++n) {
    for (long long k = 1; k <= 6; ++k) {
      for (long long t = 0; t <= 6; ++t) {
        for (long long s = 0; s <= std::min<long long>(6, k - 1); ++s) {
          if (n < 2 * k + t) continue;
          BigNat f0 = binom(k + t + s, k + t);
          BigNat g0;
          for (long long i = s + 1; i <= k; ++i) {
            g0 += binom(k + t + s, i) * binom(n - k - t - s, k - i);
          }
          CHECK(f0 + g0 == conjecture_bound(n, k, t, s));
          if (n <= 12) {
            CHECK(make_f0(static_cast<int>(n), static_cast<int>(k),
                          static_cast<int>(t), static_cast<int>(s))
                      .size() == f0.as_u64());
            CHECK(make_g0(static_cast<int>(n), static_cast<int>(k),
                          static_cast<int>(t), static_cast<int>(s))
                      .size() == g0.as_u64());
          }
        }
      }
    }
  }
}

TEST_CASE("recursion identities at spot cells") {
  CHECK(verify_recursions(TheoremId::main2, ps(8, 3, 0, 1, {}, 4)));
  CHECK(verify_recursions(TheoremId::conjecture, ps(7, 2, 1, 1)));
  CHECK(verify_recursions(TheoremId::main6, ps(8, 3, {}, 1, 2)));
  // inductive headroom is part of the contract
  CHECK_THROWS_AS(verify_recursions(TheoremId::conjecture, ps(6, 3, 0, 1)),
                  PreconditionError);
  CHECK_THROWS_AS(verify_recursions(TheoremId::hm_pair, ps(6, 3)),
                  PreconditionError);
}
