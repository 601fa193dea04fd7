#include "crossint/bounds.hpp"

#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "crossint/errors.hpp"

namespace crossint {

namespace {

constexpr long long kPascalCacheMax = 160;

const std::vector<std::vector<BigNat>>& pascal_cache() {
  static const auto table = [] {
    std::vector<std::vector<BigNat>> t(kPascalCacheMax + 1);
    for (long long n = 0; n <= kPascalCacheMax; ++n) {
      t[n].resize(n + 1);
      t[n][0] = BigNat(1);
      for (long long k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1];
        if (k <= n - 1) t[n][k] += t[n - 1][k];
      }
    }
    return t;
  }();
  return table;
}

void fail(const std::string& what, const std::string& ineq) {
  throw PreconditionError(what + ": " + ineq);
}

std::string eq(const char* name, long long v) {
  return std::string(name) + "=" + std::to_string(v);
}

// sum_{i=0}^{s} C(a,i) C(b,k-i), the complement count shared by the three
// restricted-universe style bounds.
BigNat low_trace_sum(long long a, long long b, long long k, long long s) {
  BigNat total;
  for (long long i = 0; i <= s; ++i) {
    total += binom(a, i) * binom(b, k - i);
  }
  return total;
}

struct NameEntry {
  std::string_view name;
  Formula f;
};

constexpr std::array<NameEntry, 10> kFormulaNames{{
    {"ekr", Formula::ekr},
    {"hm_intersecting", Formula::hm_intersecting},
    {"hm_pair", Formula::hm_pair},
    {"ft_pair", Formula::ft_pair},
    {"frankl_i", Formula::frankl_i},
    {"frankl_ii", Formula::frankl_ii},
    {"h", Formula::h},
    {"conjecture", Formula::conjecture},
    {"restricted", Formula::restricted},
    {"main6", Formula::main6},
}};

long long need(const std::optional<long long>& v, const char* name,
               const char* what) {
  if (!v) {
    throw PreconditionError(std::string(what) + ": missing parameter " + name);
  }
  return *v;
}

}  // namespace

BigNat binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return BigNat();
  if (b > a - b) b = a - b;
  if (a <= kPascalCacheMax) return pascal_cache()[a][b];
  BigNat r(1);
  for (long long i = 1; i <= b; ++i) {
    r.mul_u64(static_cast<std::uint64_t>(a - b + i));
    std::uint64_t rem = r.divmod_u64(static_cast<std::uint64_t>(i));
    assert(rem == 0);
    (void)rem;
  }
  return r;
}

std::optional<Formula> formula_from_string(std::string_view name) {
  for (const auto& e : kFormulaNames) {
    if (e.name == name) return e.f;
  }
  return std::nullopt;
}

std::string_view formula_name(Formula f) {
  for (const auto& e : kFormulaNames) {
    if (e.f == f) return e.name;
  }
  return "?";
}

BigNat conjecture_bound(long long n, long long k, long long t, long long s) {
  if (t < 0) fail("conjecture_bound", "t >= 0 violated (" + eq("t", t) + ")");
  if (s < 0) fail("conjecture_bound", "s >= 0 violated (" + eq("s", s) + ")");
  if (k < s + 1) {
    fail("conjecture_bound",
         "k >= s+1 violated (" + eq("k", k) + ", " + eq("s+1", s + 1) + ")");
  }
  if (n < 2 * k + t) {
    fail("conjecture_bound",
         "n >= 2k+t violated (" + eq("n", n) + ", " + eq("2k+t", 2 * k + t) + ")");
  }
  BigNat value = binom(k + t + s, k + t) + binom(n, k);
  value -= low_trace_sum(k + t + s, n - k - t - s, k, s);
  return value;
}

BigNat restricted_universe_bound(long long n, long long k, long long m,
                                 long long s) {
  if (s < 0) {
    fail("restricted_universe_bound", "s >= 0 violated (" + eq("s", s) + ")");
  }
  if (m < 1) {
    fail("restricted_universe_bound", "m >= 1 violated (" + eq("m", m) + ")");
  }
  if (k < 0 || n < k) {
    fail("restricted_universe_bound",
         "n >= k >= 0 violated (" + eq("n", n) + ", " + eq("k", k) + ")");
  }
  BigNat value = binom(n, k);
  value -= low_trace_sum(m, n - m, k, s);
  return value;
}

BigNat main6_bound(long long n, long long k, long long l, long long s) {
  if (s < 0) fail("main6_bound", "s >= 0 violated (" + eq("s", s) + ")");
  if (l < s + 1) {
    fail("main6_bound",
         "l >= s+1 violated (" + eq("l", l) + ", " + eq("s+1", s + 1) + ")");
  }
  if (k < l) {
    fail("main6_bound",
         "k >= l violated (" + eq("k", k) + ", " + eq("l", l) + ")");
  }
  if (n < k + l) {
    fail("main6_bound",
         "n >= k+l violated (" + eq("n", n) + ", " + eq("k+l", k + l) + ")");
  }
  BigNat value = binom(l + s, l) + binom(n, k);
  value -= low_trace_sum(l + s, n - l - s, k, s);
  return value;
}

BigNat evaluate_formula(Formula f, const ParamSet& p) {
  const char* what = "evaluate_formula";
  switch (f) {
    case Formula::ekr: {
      long long n = need(p.n, "n", what), k = need(p.k, "k", what);
      if (k < 2) fail("ekr", "k >= 2 violated (" + eq("k", k) + ")");
      if (n < 2 * k) {
        fail("ekr", "n >= 2k violated (" + eq("n", n) + ", " + eq("2k", 2 * k) + ")");
      }
      return binom(n - 1, k - 1);
    }
    case Formula::hm_intersecting: {
      long long n = need(p.n, "n", what), k = need(p.k, "k", what);
      if (k < 2) fail("hm_intersecting", "k >= 2 violated (" + eq("k", k) + ")");
      if (n < 2 * k) {
        fail("hm_intersecting",
             "n >= 2k violated (" + eq("n", n) + ", " + eq("2k", 2 * k) + ")");
      }
      return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + BigNat(1);
    }
    case Formula::hm_pair: {
      require_theorem_params(TheoremId::hm_pair, p);
      long long n = *p.n, k = *p.k;
      return binom(n, k) - binom(n - k, k) + BigNat(1);
    }
    case Formula::ft_pair: {
      require_theorem_params(TheoremId::ft_pair, p);
      long long n = *p.n, k = *p.k, l = *p.l;
      return binom(n, k) - binom(n - l, k) + BigNat(1);
    }
    case Formula::frankl_i: {
      require_theorem_params(TheoremId::frankl_i, p);
      return binom(*p.n, *p.k);
    }
    case Formula::frankl_ii: {
      require_theorem_params(TheoremId::frankl_ii, p);
      long long n = *p.n, k = *p.k, t = *p.t;
      return binom(n, k) - binom(n - k - t, k) + BigNat(1);
    }
    case Formula::h: {
      require_theorem_params(TheoremId::h, p);
      long long n = *p.n, k = *p.k, m = *p.m;
      BigNat value = binom(m, k);
      for (long long i = m - k + 1; i <= k - 1; ++i) {
        value += binom(m - 1, i - 1) * binom(n - m, k - i);
      }
      return value;
    }
    case Formula::conjecture: {
      return conjecture_bound(need(p.n, "n", what), need(p.k, "k", what),
                              need(p.t, "t", what), need(p.s, "s", what));
    }
    case Formula::restricted: {
      return restricted_universe_bound(need(p.n, "n", what), need(p.k, "k", what),
                                       need(p.m, "m", what), need(p.s, "s", what));
    }
    case Formula::main6: {
      return main6_bound(need(p.n, "n", what), need(p.k, "k", what),
                         need(p.l, "l", what), need(p.s, "s", what));
    }
  }
  throw PreconditionError("evaluate_formula: unknown formula id");
}

BigNat bound_for_theorem(TheoremId id, const ParamSet& p) {
  switch (id) {
    case TheoremId::hm_pair:
      return evaluate_formula(Formula::hm_pair, p);
    case TheoremId::ft_pair:
      return evaluate_formula(Formula::ft_pair, p);
    case TheoremId::frankl_i:
      return evaluate_formula(Formula::frankl_i, p);
    case TheoremId::frankl_ii:
      return evaluate_formula(Formula::frankl_ii, p);
    case TheoremId::conjecture:
      return evaluate_formula(Formula::conjecture, p);
    case TheoremId::main2:
      return evaluate_formula(Formula::restricted, p);
    case TheoremId::main6:
      return evaluate_formula(Formula::main6, p);
    case TheoremId::h:
      return evaluate_formula(Formula::h, p);
  }
  throw PreconditionError("bound_for_theorem: unknown theorem id");
}

bool verify_recursions(TheoremId id, const ParamSet& p) {
  const char* what = "verify_recursions";
  switch (id) {
    case TheoremId::main2: {
      // The identity on R alone; t plays no role in it.
      long long n = need(p.n, "n", what), k = need(p.k, "k", what),
                m = need(p.m, "m", what), s = need(p.s, "s", what);
      if (s < 0) fail(what, "s >= 0 violated (" + eq("s", s) + ")");
      if (m < 1) fail(what, "m >= 1 violated (" + eq("m", m) + ")");
      if (k < 1 || n <= k) {
        fail(what, "n > k >= 1 violated (" + eq("n", n) + ", " + eq("k", k) + ")");
      }
      if (n <= m) {
        fail(what, "n > m violated (" + eq("n", n) + ", " + eq("m", m) + ")");
      }
      BigNat lhs = restricted_universe_bound(n, k, m, s);
      BigNat rhs = restricted_universe_bound(n - 1, k, m, s) +
                   restricted_universe_bound(n - 1, k - 1, m, s);
      return lhs == rhs;
    }
    case TheoremId::conjecture: {
      require_theorem_params(TheoremId::conjecture, p);
      long long n = *p.n, k = *p.k, t = *p.t, s = *p.s;
      if (n <= 2 * k + t) {
        fail(what, "n > 2k+t violated (" + eq("n", n) + ", " +
                       eq("2k+t", 2 * k + t) + ")");
      }
      BigNat lhs = conjecture_bound(n, k, t, s);
      BigNat rhs = conjecture_bound(n - 1, k, t, s) +
                   restricted_universe_bound(n - 1, k - 1, k + t + s, s);
      return lhs == rhs;
    }
    case TheoremId::main6: {
      require_theorem_params(TheoremId::main6, p);
      long long n = *p.n, k = *p.k, l = *p.l, s = *p.s;
      if (n <= k + l) {
        fail(what,
             "n > k+l violated (" + eq("n", n) + ", " + eq("k+l", k + l) + ")");
      }
      BigNat lhs = main6_bound(n, k, l, s);
      BigNat rhs = main6_bound(n - 1, k, l, s) +
                   restricted_universe_bound(n - 1, k - 1, l + s, s);
      return lhs == rhs;
    }
    default:
      throw PreconditionError(
          "verify_recursions: no recursion identity for theorem '" +
          std::string(theorem_name(id)) + "'");
  }
}

}  // namespace crossint
