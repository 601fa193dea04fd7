#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "crossint/set_family.hpp"

namespace crossint {

/// True iff every two distinct members share at least t elements. Empty and
/// singleton families qualify, and t <= 0 always holds. (For a k-uniform
/// family with t <= k this coincides with quantifying over all ordered
/// member pairs.)
bool is_t_intersecting(const SetFamily& family, int t);

/// First violating pair in lex scan order, if any.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_t_violation(
    const SetFamily& family, int t);

/// True iff every member of f meets every member of g. Vacuously true when
/// either family is empty. Throws on universe mismatch.
bool are_cross_intersecting(const SetFamily& f, const SetFamily& g);
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_cross_violation(
    const SetFamily& f, const SetFamily& g);

/// True iff every k-subset of [1,m] is a member (k from the family).
/// Requires k <= m <= n.
bool contains_clique(const SetFamily& family, int m);
/// The lexicographically first missing k-subset of [1,m], if any.
std::optional<std::uint64_t> find_missing_clique_member(const SetFamily& family,
                                                        int m);

/// Smallest element contained in every member, if one exists (the family is
/// then a subfamily of a full star). The empty family reports element 1 by
/// convention.
std::optional<int> is_star_subfamily(const SetFamily& family);

/// min over members of |F intersect [1,m]|. Requires a non-empty family and
/// 1 <= m <= n.
int trace_profile(const SetFamily& family, int m);

namespace serial {
// Single-threaded reference implementations kept for testing and benchmarks.
bool is_t_intersecting(const SetFamily& family, int t);
bool are_cross_intersecting(const SetFamily& f, const SetFamily& g);
}  // namespace serial

}  // namespace crossint
