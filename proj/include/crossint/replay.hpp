#pragma once

#include <string>
#include <vector>

#include "crossint/params.hpp"
#include "crossint/set_family.hpp"

namespace crossint {

enum class CheckStatus { pass, fail, skipped };
std::string_view check_status_name(CheckStatus s);

struct ReplayCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct ReplayReport {
  TheoremId theorem;
  bool f_changed_by_canonicalization = false;
  bool g_changed_by_canonicalization = false;
  std::vector<ReplayCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return false;
    }
    return true;
  }
};

/// Mechanically replays one induction level on a concrete pair:
/// canonicalizes (F,G) by simultaneous shifting, splits both at the top
/// element, and checks the partition identities, the link-level
/// cross/intersection conclusions, the trace conditions carried down one
/// level, and the per-level bound inequalities of the stated theorem
/// (conjecture, main2 or main6). Hypothesis violations are reported as
/// failing checks, never silently dropped.
ReplayReport induction_replay(const SetFamily& f, const SetFamily& g,
                              TheoremId theorem, const ParamSet& params);

}  // namespace crossint
