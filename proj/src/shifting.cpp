#include "crossint/shifting.hpp"

#include <cassert>
#include <string>

#include "crossint/subsets.hpp"

namespace crossint {

namespace {

void check_pair(const SetFamily& family, int i, int j) {
  if (i < 1 || j <= i || j > family.universe()) {
    throw PreconditionError("shift: 1 <= i < j <= n violated (i=" +
                            std::to_string(i) + ", j=" + std::to_string(j) +
                            ", n=" + std::to_string(family.universe()) + ")");
  }
}

}  // namespace

SetFamily shift_family(const SetFamily& family, int i, int j) {
  check_pair(family, i, j);
  std::uint64_t bi = element_bit(i), bj = element_bit(j);
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (std::uint64_t f : family.masks()) {
    if ((f & bj) && !(f & bi)) {
      std::uint64_t g = (f & ~bj) | bi;
      out.push_back(family.contains(g) ? f : g);
    } else {
      out.push_back(f);
    }
  }
  SetFamily result = SetFamily::make(family.universe(), family.k(), std::move(out));
  assert(result.size() == family.size());
  return result;
}

std::optional<ShiftWitness> find_unshifted_witness(const SetFamily& family) {
  int n = family.universe();
  for (std::uint64_t f : family.masks()) {
    for (int j = 2; j <= n; ++j) {
      std::uint64_t bj = element_bit(j);
      if (!(f & bj)) continue;
      for (int i = 1; i < j; ++i) {
        std::uint64_t bi = element_bit(i);
        if (f & bi) continue;
        if (!family.contains((f & ~bj) | bi)) {
          return ShiftWitness{f, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_shifted(const SetFamily& family) {
  return !find_unshifted_witness(family).has_value();
}

SetFamily shift_to_canonical(const SetFamily& family) {
  SetFamily cur = family;
  int n = cur.universe();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n && !changed; ++i) {
      for (int j = i + 1; j <= n && !changed; ++j) {
        SetFamily next = shift_family(cur, i, j);
        if (next != cur) {
          cur = std::move(next);
          changed = true;  // restart the scan from (1,2)
        }
      }
    }
  }
  return cur;
}

std::pair<SetFamily, SetFamily> shift_pair_to_canonical(const SetFamily& f,
                                                        const SetFamily& g) {
  if (f.universe() != g.universe()) {
    throw PreconditionError("shift_pair_to_canonical: universe mismatch (" +
                            std::to_string(f.universe()) + " vs " +
                            std::to_string(g.universe()) + ")");
  }
  SetFamily cf = f, cg = g;
  int n = cf.universe();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n && !changed; ++i) {
      for (int j = i + 1; j <= n && !changed; ++j) {
        SetFamily nf = shift_family(cf, i, j);
        SetFamily ng = shift_family(cg, i, j);
        if (nf != cf || ng != cg) {
          cf = std::move(nf);
          cg = std::move(ng);
          changed = true;
        }
      }
    }
  }
  return {std::move(cf), std::move(cg)};
}

}  // namespace crossint
