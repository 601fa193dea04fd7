#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace crossint {

/// Hard cap on explicit ground sets: one machine word of bitmask.
inline constexpr int kMaxUniverse = 64;

/// C(n,k) for 0 <= n <= 64, zero convention for k < 0 or k > n.
/// All such values fit a 64-bit word exactly.
std::uint64_t binom64(int n, int k);

/// Bitmask of the prefix [1,m]: bits 0..m-1 set.
inline std::uint64_t prefix_mask(int m) {
  if (m <= 0) return 0;
  if (m >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << m) - 1;
}

inline std::uint64_t element_bit(int element) {
  return std::uint64_t{1} << (element - 1);
}

/// Lexicographic order on subsets encoded as bitmasks (bit i-1 <-> element i):
/// A precedes B iff the least element of the symmetric difference lies in A.
/// For k-uniform sets this matches comparing sorted element lists.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

/// Visits all k-subsets of [1,n] as bitmasks in lexicographic order.
/// k > n or k < 0 yields nothing; k == 0 yields the empty set once.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::vector<int> a(k);
  for (int i = 0; i < k; ++i) a[i] = i + 1;
  for (;;) {
    std::uint64_t mask = 0;
    for (int e : a) mask |= element_bit(e);
    fn(mask);
    int i = k - 1;
    while (i >= 0 && a[i] == n - k + 1 + i) --i;
    if (i < 0) return;
    ++a[i];
    for (int j = i + 1; j < k; ++j) a[j] = a[j - 1] + 1;
  }
}

/// All k-subsets of [1,n] in lexicographic order. Guarded against layers too
/// large to materialize.
std::vector<std::uint64_t> all_k_subsets(int n, int k);

/// Number of k-subsets of [1,n] (n <= 64).
std::uint64_t layer_size(int n, int k);

/// Zero-based position of `mask` in the lexicographic enumeration of
/// k-subsets of [1,n], where k = popcount(mask).
std::uint64_t lex_rank(int n, int k, std::uint64_t mask);

/// Inverse of lex_rank over [0, C(n,k)).
std::uint64_t lex_unrank(int n, int k, std::uint64_t rank);

}  // namespace crossint
