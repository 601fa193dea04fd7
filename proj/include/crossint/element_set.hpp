#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "crossint/errors.hpp"
#include "crossint/subsets.hpp"

namespace crossint {

/// A subset of the ground set [1,n], bitmask-backed: bit (i-1) set iff
/// element i is present. Immutable value type.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_mask(std::uint64_t mask, int n) {
    check_universe(n);
    if (n < 64 && (mask >> n) != 0) {
      throw PreconditionError("ElementSet: element beyond universe (n=" +
                              std::to_string(n) + ")");
    }
    return ElementSet(mask, n);
  }

  static ElementSet from_elements(const std::vector<int>& elems, int n) {
    check_universe(n);
    std::uint64_t mask = 0;
    for (int e : elems) {
      if (e < 1 || e > n) {
        throw PreconditionError("ElementSet: element " + std::to_string(e) +
                                " outside [1," + std::to_string(n) + "]");
      }
      std::uint64_t b = element_bit(e);
      if (mask & b) {
        throw PreconditionError("ElementSet: duplicate element " +
                                std::to_string(e));
      }
      mask |= b;
    }
    return ElementSet(mask, n);
  }

  int universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int element) const {
    return element >= 1 && element <= universe_ && (mask_ & element_bit(element));
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  ElementSet(std::uint64_t mask, int n) : mask_(mask), universe_(n) {}

  static void check_universe(int n) {
    if (n < 0 || n > kMaxUniverse) {
      throw PreconditionError("ElementSet: 0 <= n <= 64 violated (n=" +
                              std::to_string(n) + ")");
    }
  }

  std::uint64_t mask_ = 0;
  int universe_ = 0;
};

}  // namespace crossint
