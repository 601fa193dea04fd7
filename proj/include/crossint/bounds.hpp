#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "crossint/bignat.hpp"
#include "crossint/params.hpp"

namespace crossint {

/// C(a,b) in exact arbitrary precision, with the zero convention:
/// C(a,b) = 0 whenever a < 0, b < 0 or a < b, and C(a,0) = 1 for a >= 0.
/// The convention is what keeps the alternating prefix sums below
/// well-defined when upper arguments go negative.
BigNat binom(long long a, long long b);

/// Closed-form size bounds, keyed for the CLI. The classic entries:
///   ekr              C(n-1,k-1)                      max intersecting family
///   hm_intersecting  C(n-1,k-1)-C(n-k-1,k-1)+1       max non-trivial intersecting
///   hm_pair          C(n,k)-C(n-k,k)+1               nonempty cross pair, equal k
///   ft_pair          C(n,k)-C(n-l,k)+1               nonempty cross pair, k and l
///   frankl_i         C(n,k)                          F t-intersecting
///   frankl_ii        C(n,k)-C(n-k-t,k)+1             F (t+1)-intersecting, nonempty
///   h                C(m,k)+sum C(m-1,i-1)C(n-m,k-i) intersecting with m-clique
/// plus the three bounds this toolkit certifies by search:
///   conjecture, restricted, main6.
enum class Formula {
  ekr,
  hm_intersecting,
  hm_pair,
  ft_pair,
  frankl_i,
  frankl_ii,
  h,
  conjecture,
  restricted,
  main6,
};

std::optional<Formula> formula_from_string(std::string_view name);
std::string_view formula_name(Formula f);

/// C(k+t+s,k+t) + C(n,k) - sum_{i<=s} C(k+t+s,i) C(n-k-t-s,k-i).
/// Requires t,s >= 0, k >= s+1, n >= 2k+t.
BigNat conjecture_bound(long long n, long long k, long long t, long long s);

/// C(n,k) - sum_{i<=s} C(m,i) C(n-m,k-i). For m <= n this is the number of
/// k-subsets of [n] whose trace on [m] has size at least s+1. Accepts any
/// n >= k >= 0, m >= 1, s >= 0.
BigNat restricted_universe_bound(long long n, long long k, long long m,
                                 long long s);

/// C(l+s,l) + C(n,k) - sum_{i<=s} C(l+s,i) C(n-l-s,k-i).
/// Requires s >= 0, k >= l >= s+1, n >= k+l.
BigNat main6_bound(long long n, long long k, long long l, long long s);

/// Evaluates any formula against a ParamSet, validating its preconditions.
BigNat evaluate_formula(Formula f, const ParamSet& p);

/// The closed form a search under the given hypotheses is compared against.
BigNat bound_for_theorem(TheoremId id, const ParamSet& p);

/// Exact one-step recursion identities behind the inductions:
///   main2:      R(n,k,m,s)        = R(n-1,k,m,s) + R(n-1,k-1,m,s)
///   conjecture: B(n,k,t,s)        = B(n-1,k,t,s) + R(n-1,k-1,k+t+s,s)
///   main6:      M(n,k,l,s)        = M(n-1,k,l,s) + R(n-1,k-1,l+s,s)
/// where R is restricted_universe_bound, B the conjecture bound, M the main6
/// bound. Each identity needs room for one induction step: n > m for the
/// main2 form (which involves only n, k, m, s), n > 2k+t for conjecture,
/// n > k+l for main6.
bool verify_recursions(TheoremId id, const ParamSet& p);

}  // namespace crossint
