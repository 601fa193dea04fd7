#include "crossint/subsets.hpp"

#include <array>
#include <bit>
#include <string>

#include "crossint/errors.hpp"

namespace crossint {

namespace {

constexpr int kTableN = kMaxUniverse;

const std::array<std::array<std::uint64_t, kTableN + 1>, kTableN + 1>& pascal64() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kTableN + 1>, kTableN + 1> t{};
    for (int n = 0; n <= kTableN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binom64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return pascal64()[n][k];
}

std::uint64_t layer_size(int n, int k) {
  if (n < 0 || n > kMaxUniverse) {
    throw PreconditionError("layer_size: 0 <= n <= 64 violated (n=" +
                            std::to_string(n) + ")");
  }
  return binom64(n, k);
}

std::vector<std::uint64_t> all_k_subsets(int n, int k) {
  constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 26;
  std::uint64_t count = layer_size(n, k);
  if (count > kEnumerationGuard) {
    throw SizeGuardError("all_k_subsets: C(" + std::to_string(n) + "," +
                         std::to_string(k) + ")=" + std::to_string(count) +
                         " exceeds enumeration guard");
  }
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_k_subset(n, k, [&](std::uint64_t m) { out.push_back(m); });
  return out;
}

std::uint64_t lex_rank(int n, int k, std::uint64_t mask) {
  if (std::popcount(mask) != k) {
    throw PreconditionError("lex_rank: popcount(mask) == k violated");
  }
  if (mask >> n) {
    throw PreconditionError("lex_rank: mask has elements beyond the universe");
  }
  std::uint64_t rank = 0;
  int prev = 0;  // last element placed
  int i = 1;     // 1-based position within the set
  for (int e = 1; e <= n && i <= k; ++e) {
    if (mask & element_bit(e)) {
      for (int c = prev + 1; c < e; ++c) rank += binom64(n - c, k - i);
      prev = e;
      ++i;
    }
  }
  return rank;
}

std::uint64_t lex_unrank(int n, int k, std::uint64_t rank) {
  if (rank >= layer_size(n, k)) {
    throw PreconditionError("lex_unrank: rank < C(n,k) violated");
  }
  std::uint64_t mask = 0;
  int prev = 0;
  for (int i = 1; i <= k; ++i) {
    int c = prev + 1;
    for (;;) {
      std::uint64_t below = binom64(n - c, k - i);
      if (rank < below) break;
      rank -= below;
      ++c;
    }
    mask |= element_bit(c);
    prev = c;
  }
  return mask;
}

}  // namespace crossint
