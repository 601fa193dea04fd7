#pragma once

#include <optional>
#include <utility>

#include "crossint/set_family.hpp"

namespace crossint {

/// One application of the (i,j)-shift, 1 <= i < j <= n: each member
/// containing j but not i is replaced by (F \ {j}) u {i} unless that set is
/// already a member. Applied set-wise across the whole family; preserves the
/// family size.
SetFamily shift_family(const SetFamily& family, int i, int j);

/// True iff every (i,j)-shift with i < j fixes the family.
bool is_shifted(const SetFamily& family);

/// A concrete violation of shiftedness: (member, i, j) whose shifted image is
/// missing. Disengaged when the family is shifted.
struct ShiftWitness {
  std::uint64_t member;
  int i, j;
};
std::optional<ShiftWitness> find_unshifted_witness(const SetFamily& family);

/// Repeatedly applies (i,j)-shifts scanning pairs in row-major order
/// (1,2),(1,3),...,(1,n),(2,3),..., restarting after every change, until a
/// full pass fixes the family. The scan order is part of the contract: other
/// orders also terminate at shifted families but may reach different ones.
SetFamily shift_to_canonical(const SetFamily& family);

/// Canonicalizes two families by applying every shift to both simultaneously
/// (the same scan order as shift_to_canonical, restart when either changes).
/// Simultaneous application is what keeps a cross-intersecting pair
/// cross-intersecting at every step.
std::pair<SetFamily, SetFamily> shift_pair_to_canonical(const SetFamily& f,
                                                        const SetFamily& g);

}  // namespace crossint
