#pragma once

#include <cstdint>
#include <vector>

#include "crossint/element_set.hpp"

namespace crossint {

/// A k-uniform family of subsets of [1,n]. Members are stored as bitmasks,
/// deduplicated and sorted in lexicographic order at construction, and the
/// family is immutable afterwards. Safe to share read-only across threads.
class SetFamily {
 public:
  SetFamily() = default;

  /// Validates uniformity and universe, then sorts and deduplicates.
  static SetFamily make(int universe, int k, std::vector<std::uint64_t> masks);
  static SetFamily empty(int universe, int k) { return make(universe, k, {}); }
  /// Convenience for literals in tests and parsers.
  static SetFamily from_lists(int universe, int k,
                              const std::vector<std::vector<int>>& sets);

  int universe() const { return universe_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }

  const std::vector<std::uint64_t>& masks() const { return members_; }
  bool contains(std::uint64_t mask) const;

  ElementSet member(std::size_t i) const {
    return ElementSet::from_mask(members_[i], universe_);
  }
  std::vector<std::vector<int>> element_lists() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int universe_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> members_;
};

struct LinkDeletion {
  SetFamily link;      // {F \ {i} : i in F}, uniform k-1
  SetFamily deletion;  // {F : i not in F}, uniform k
};

/// Splits a family along element i. When i == n both parts are reported over
/// the universe n-1, matching the one-element reduction used by inductions.
LinkDeletion link_and_deletion(const SetFamily& family, int element);

}  // namespace crossint
