#include "crossint/properties.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include "crossint/subsets.hpp"

namespace crossint {

namespace {

// Below this many pairs the OpenMP setup costs more than the scan.
constexpr std::size_t kParallelPairThreshold = 1u << 16;

}  // namespace

namespace serial {

bool is_t_intersecting(const SetFamily& family, int t) {
  if (t <= 0) return true;
  const auto& ms = family.masks();
  for (std::size_t a = 0; a + 1 < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (std::popcount(ms[a] & ms[b]) < t) return false;
    }
  }
  return true;
}

bool are_cross_intersecting(const SetFamily& f, const SetFamily& g) {
  for (std::uint64_t a : f.masks()) {
    for (std::uint64_t b : g.masks()) {
      if ((a & b) == 0) return false;
    }
  }
  return true;
}

}  // namespace serial

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_t_violation(
    const SetFamily& family, int t) {
  if (t <= 0) return std::nullopt;
  const auto& ms = family.masks();
  for (std::size_t a = 0; a + 1 < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (std::popcount(ms[a] & ms[b]) < t) return std::make_pair(ms[a], ms[b]);
    }
  }
  return std::nullopt;
}

bool is_t_intersecting(const SetFamily& family, int t) {
  if (t <= 0) return true;
  const auto& ms = family.masks();
  std::size_t count = ms.size();
  if (count * count < kParallelPairThreshold) {
    return serial::is_t_intersecting(family, t);
  }
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t a = 0; a < count; ++a) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    for (std::size_t b = a + 1; b < count; ++b) {
      if (std::popcount(ms[a] & ms[b]) < t) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return ok.load();
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_cross_violation(
    const SetFamily& f, const SetFamily& g) {
  if (f.universe() != g.universe()) {
    throw PreconditionError("are_cross_intersecting: universe mismatch (" +
                            std::to_string(f.universe()) + " vs " +
                            std::to_string(g.universe()) + ")");
  }
  for (std::uint64_t a : f.masks()) {
    for (std::uint64_t b : g.masks()) {
      if ((a & b) == 0) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool are_cross_intersecting(const SetFamily& f, const SetFamily& g) {
  if (f.universe() != g.universe()) {
    throw PreconditionError("are_cross_intersecting: universe mismatch (" +
                            std::to_string(f.universe()) + " vs " +
                            std::to_string(g.universe()) + ")");
  }
  const auto& fa = f.masks();
  const auto& ga = g.masks();
  if (fa.size() * ga.size() < kParallelPairThreshold) {
    return serial::are_cross_intersecting(f, g);
  }
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t a = 0; a < fa.size(); ++a) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    for (std::uint64_t b : ga) {
      if ((fa[a] & b) == 0) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return ok.load();
}

std::optional<std::uint64_t> find_missing_clique_member(const SetFamily& family,
                                                        int m) {
  if (m < family.k()) {
    throw PreconditionError("contains_clique: m >= k violated (m=" +
                            std::to_string(m) + ", k=" +
                            std::to_string(family.k()) + ")");
  }
  if (m > family.universe()) {
    throw PreconditionError("contains_clique: m <= n violated (m=" +
                            std::to_string(m) + ", n=" +
                            std::to_string(family.universe()) + ")");
  }
  std::optional<std::uint64_t> missing;
  // for_each has no early exit; the layers involved are tiny.
  for_each_k_subset(m, family.k(), [&](std::uint64_t sub) {
    if (!missing && !family.contains(sub)) missing = sub;
  });
  return missing;
}

bool contains_clique(const SetFamily& family, int m) {
  return !find_missing_clique_member(family, m).has_value();
}

std::optional<int> is_star_subfamily(const SetFamily& family) {
  if (family.is_empty()) return 1;
  std::uint64_t common = ~std::uint64_t{0};
  for (std::uint64_t f : family.masks()) common &= f;
  if (common == 0) return std::nullopt;
  return std::countr_zero(common) + 1;
}

int trace_profile(const SetFamily& family, int m) {
  if (family.is_empty()) {
    throw PreconditionError("trace_profile: family must be non-empty");
  }
  if (m < 1 || m > family.universe()) {
    throw PreconditionError("trace_profile: 1 <= m <= n violated (m=" +
                            std::to_string(m) + ", n=" +
                            std::to_string(family.universe()) + ")");
  }
  std::uint64_t pm = prefix_mask(m);
  int best = family.k() + 1;
  for (std::uint64_t f : family.masks()) {
    best = std::min(best, std::popcount(f & pm));
  }
  return best;
}

}  // namespace crossint
