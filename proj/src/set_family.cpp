#include "crossint/set_family.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "crossint/subsets.hpp"

namespace crossint {

SetFamily SetFamily::make(int universe, int k, std::vector<std::uint64_t> masks) {
  if (universe < 0 || universe > kMaxUniverse) {
    throw PreconditionError("SetFamily: 0 <= n <= 64 violated (n=" +
                            std::to_string(universe) + ")");
  }
  if (k < 0 || k > universe) {
    throw PreconditionError("SetFamily: 0 <= k <= n violated (k=" +
                            std::to_string(k) + ", n=" +
                            std::to_string(universe) + ")");
  }
  for (std::uint64_t m : masks) {
    if (universe < 64 && (m >> universe) != 0) {
      throw PreconditionError("SetFamily: member outside universe [1," +
                              std::to_string(universe) + "]");
    }
    if (std::popcount(m) != k) {
      throw PreconditionError("SetFamily: member of size " +
                              std::to_string(std::popcount(m)) +
                              " in a k=" + std::to_string(k) + " family");
    }
  }
  std::sort(masks.begin(), masks.end(), lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SetFamily f;
  f.universe_ = universe;
  f.k_ = k;
  f.members_ = std::move(masks);
  return f;
}

SetFamily SetFamily::from_lists(int universe, int k,
                                const std::vector<std::vector<int>>& sets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    masks.push_back(ElementSet::from_elements(s, universe).mask());
  }
  return make(universe, k, std::move(masks));
}

bool SetFamily::contains(std::uint64_t mask) const {
  return std::binary_search(members_.begin(), members_.end(), mask, lex_less);
}

std::vector<std::vector<int>> SetFamily::element_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(members_.size());
  for (std::uint64_t m : members_) {
    out.push_back(ElementSet::from_mask(m, universe_).elements());
  }
  return out;
}

LinkDeletion link_and_deletion(const SetFamily& family, int element) {
  int n = family.universe();
  if (element < 1 || element > n) {
    throw PreconditionError("link_and_deletion: element " +
                            std::to_string(element) + " outside [1," +
                            std::to_string(n) + "]");
  }
  std::uint64_t bit = element_bit(element);
  std::vector<std::uint64_t> link, del;
  for (std::uint64_t m : family.masks()) {
    if (m & bit) {
      link.push_back(m & ~bit);
    } else {
      del.push_back(m);
    }
  }
  int out_universe = (element == n) ? n - 1 : n;
  int link_k = family.k() > 0 ? family.k() - 1 : 0;
  // An empty part keeps the natural uniformity label, clamped to the
  // (possibly shrunken) universe.
  int del_k = del.empty() ? std::min(family.k(), out_universe) : family.k();
  if (link.empty()) link_k = std::min(link_k, out_universe);
  return LinkDeletion{SetFamily::make(out_universe, link_k, std::move(link)),
                      SetFamily::make(out_universe, del_k, std::move(del))};
}

}  // namespace crossint
