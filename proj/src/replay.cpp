#include "crossint/replay.hpp"

#include <sstream>

#include "crossint/bounds.hpp"
#include "crossint/errors.hpp"
#include "crossint/properties.hpp"
#include "crossint/shifting.hpp"
#include "crossint/subsets.hpp"

namespace crossint {

namespace {

std::string set_str(std::uint64_t mask, int n) {
  return ElementSet::from_mask(mask, n).str();
}

class Recorder {
 public:
  explicit Recorder(ReplayReport& rep) : rep_(rep) {}

  void add(const std::string& name, CheckStatus status,
           const std::string& detail = "") {
    rep_.checks.push_back({name, status, detail});
  }

  void verdict(const std::string& name, bool ok, const std::string& detail = "") {
    add(name, ok ? CheckStatus::pass : CheckStatus::fail, detail);
  }

 private:
  ReplayReport& rep_;
};

// min trace over members, as a pass/fail against a threshold; empty families
// pass vacuously.
void check_trace(Recorder& rec, const std::string& name, const SetFamily& fam,
                 int m, int threshold) {
  if (fam.is_empty()) {
    rec.add(name, CheckStatus::skipped, "empty family");
    return;
  }
  int tp = trace_profile(fam, std::min(m, fam.universe()));
  std::ostringstream os;
  os << "min |member cap [" << m << "]| = " << tp << ", need >= " << threshold;
  rec.verdict(name, tp >= threshold, os.str());
}

void check_level_bound(Recorder& rec, const std::string& name,
                       const SetFamily& a, const SetFamily& b,
                       const BigNat& bound) {
  BigNat total(static_cast<std::uint64_t>(a.size() + b.size()));
  std::ostringstream os;
  os << a.size() << "+" << b.size() << " <= " << bound.str();
  rec.verdict(name, total <= bound, os.str());
}

}  // namespace

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

ReplayReport induction_replay(const SetFamily& f, const SetFamily& g,
                              TheoremId theorem, const ParamSet& params) {
  if (theorem != TheoremId::conjecture && theorem != TheoremId::main2 &&
      theorem != TheoremId::main6) {
    throw PreconditionError(
        "induction_replay: supported theorems are conjecture, main2, main6");
  }
  require_theorem_params(theorem, params);

  long long n = *params.n, k = *params.k;
  long long t = params.t.value_or(0), s = params.s.value_or(0),
            l = params.l.value_or(0), m = params.m.value_or(0);

  int kf = 0, kg = 0;      // expected uniformities of F and G
  int prefix = 0;          // the prefix the trace conditions live on
  int f_trace = 0, g_trace = 0;
  switch (theorem) {
    case TheoremId::conjecture:
      kf = static_cast<int>(k + t);
      kg = static_cast<int>(k);
      prefix = static_cast<int>(k + t + s);
      f_trace = static_cast<int>(t + s + 1);
      g_trace = static_cast<int>(s + 1);
      break;
    case TheoremId::main2:
      kf = static_cast<int>(k + t);
      kg = static_cast<int>(k);
      prefix = static_cast<int>(m);
      f_trace = static_cast<int>(t + s + 1);
      g_trace = static_cast<int>(s + 1);
      break;
    case TheoremId::main6:
      kf = static_cast<int>(k);
      kg = static_cast<int>(l);
      prefix = static_cast<int>(l + s);
      f_trace = static_cast<int>(s + 1);
      g_trace = static_cast<int>(s + 1);
      break;
    default:
      break;
  }

  ReplayReport rep;
  rep.theorem = theorem;
  Recorder rec(rep);

  bool layers_ok = f.universe() == n && g.universe() == n && f.k() == kf &&
                   g.k() == kg;
  {
    std::ostringstream os;
    os << "F: C([" << f.universe() << "]," << f.k() << "), G: C(["
       << g.universe() << "]," << g.k() << "); expected n=" << n << ", kF=" << kf
       << ", kG=" << kg;
    rec.verdict("layers", layers_ok, os.str());
  }
  if (!layers_ok) return rep;

  // Hypotheses on the input pair.
  {
    auto viol = find_cross_violation(f, g);
    rec.verdict("hypothesis_cross_intersecting", !viol,
                viol ? set_str(viol->first, static_cast<int>(n)) + " vs " +
                           set_str(viol->second, static_cast<int>(n))
                     : "");
  }
  switch (theorem) {
    case TheoremId::conjecture: {
      auto viol = find_t_violation(f, static_cast<int>(t + 1));
      rec.verdict("hypothesis_f_t1_intersecting", !viol,
                  viol ? set_str(viol->first, static_cast<int>(n)) + " vs " +
                             set_str(viol->second, static_cast<int>(n))
                       : "");
      auto missing = find_missing_clique_member(f, prefix);
      rec.verdict("hypothesis_f_contains_clique", !missing,
                  missing ? "missing " + set_str(*missing, static_cast<int>(n))
                          : "");
      break;
    }
    case TheoremId::main2: {
      auto viol = find_t_violation(f, static_cast<int>(t));
      rec.verdict("hypothesis_f_t_intersecting", !viol,
                  viol ? set_str(viol->first, static_cast<int>(n)) + " vs " +
                             set_str(viol->second, static_cast<int>(n))
                       : "");
      check_trace(rec, "hypothesis_f_trace", f, prefix, f_trace);
      check_trace(rec, "hypothesis_g_trace", g, prefix, g_trace);
      break;
    }
    case TheoremId::main6: {
      auto viol = find_t_violation(g, 1);
      rec.verdict("hypothesis_g_intersecting", !viol,
                  viol ? set_str(viol->first, static_cast<int>(n)) + " vs " +
                             set_str(viol->second, static_cast<int>(n))
                       : "");
      auto missing = find_missing_clique_member(g, prefix);
      rec.verdict("hypothesis_g_contains_clique", !missing,
                  missing ? "missing " + set_str(*missing, static_cast<int>(n))
                          : "");
      break;
    }
    default:
      break;
  }

  // Canonicalize the pair with simultaneous shifts, then split at n.
  auto [cf, cg] = shift_pair_to_canonical(f, g);
  rep.f_changed_by_canonicalization = (cf != f);
  rep.g_changed_by_canonicalization = (cg != g);
  rec.verdict("canonical_shifted", is_shifted(cf) && is_shifted(cg));
  rec.verdict("canonical_sizes_preserved",
              cf.size() == f.size() && cg.size() == g.size());
  {
    auto viol = find_cross_violation(cf, cg);
    rec.verdict("canonical_cross_intersecting", !viol,
                viol ? set_str(viol->first, static_cast<int>(n)) + " vs " +
                           set_str(viol->second, static_cast<int>(n))
                     : "");
  }

  LinkDeletion fparts = link_and_deletion(cf, static_cast<int>(n));
  LinkDeletion gparts = link_and_deletion(cg, static_cast<int>(n));
  rec.verdict("partition_f",
              fparts.link.size() + fparts.deletion.size() == cf.size());
  rec.verdict("partition_g",
              gparts.link.size() + gparts.deletion.size() == cg.size());

  // Claimed trace conclusions, on the pair and carried one level down.
  check_trace(rec, "trace_f", cf, prefix, f_trace);
  check_trace(rec, "trace_g", cg, prefix, g_trace);
  check_trace(rec, "trace_f_deletion", fparts.deletion, prefix, f_trace);
  check_trace(rec, "trace_g_deletion", gparts.deletion, prefix, g_trace);
  check_trace(rec, "trace_f_link", fparts.link, prefix, f_trace);
  check_trace(rec, "trace_g_link", gparts.link, prefix, g_trace);

  // Link families of a shifted cross-intersecting pair stay cross-intersecting.
  {
    auto viol = find_cross_violation(fparts.link, gparts.link);
    rec.verdict("link_cross_intersecting", !viol,
                viol ? set_str(viol->first, static_cast<int>(n) - 1) + " vs " +
                           set_str(viol->second, static_cast<int>(n) - 1)
                     : "");
  }
  // The intersection level carries to the link when there is headroom.
  {
    int level = 0;
    bool applicable = false;
    if (theorem == TheoremId::conjecture) {
      level = static_cast<int>(t + 1);
      applicable = n > 2 * k + t;
    } else if (theorem == TheoremId::main2) {
      level = static_cast<int>(t);
      applicable = n > 2 * k + t;
    }
    if (applicable) {
      auto viol = find_t_violation(fparts.link, level);
      std::ostringstream os;
      os << "level " << level;
      rec.verdict("link_f_intersecting_carry", !viol, os.str());
    } else {
      rec.add("link_f_intersecting_carry", CheckStatus::skipped,
              theorem == TheoremId::main6 ? "not part of this reduction"
                                          : "no headroom: n at the base case");
    }
  }

  // Per-level bound inequalities.
  switch (theorem) {
    case TheoremId::conjecture: {
      if (n > 2 * k + t) {
        check_level_bound(rec, "deletion_level_bound", fparts.deletion,
                          gparts.deletion, conjecture_bound(n - 1, k, t, s));
        check_level_bound(
            rec, "link_level_bound", fparts.link, gparts.link,
            restricted_universe_bound(n - 1, k - 1, k + t + s, s));
      } else {
        rec.add("deletion_level_bound", CheckStatus::skipped,
                "base case: n = 2k+t");
        rec.add("link_level_bound", CheckStatus::skipped, "base case: n = 2k+t");
      }
      break;
    }
    case TheoremId::main2: {
      if (n > 2 * k + t && m < n) {
        check_level_bound(rec, "deletion_level_bound", fparts.deletion,
                          gparts.deletion,
                          restricted_universe_bound(n - 1, k, m, s));
        check_level_bound(rec, "link_level_bound", fparts.link, gparts.link,
                          restricted_universe_bound(n - 1, k - 1, m, s));
      } else {
        rec.add("deletion_level_bound", CheckStatus::skipped,
                "base case: n = 2k+t or m >= n");
        rec.add("link_level_bound", CheckStatus::skipped,
                "base case: n = 2k+t or m >= n");
      }
      break;
    }
    case TheoremId::main6: {
      if (n > k + l) {
        check_level_bound(rec, "deletion_level_bound", fparts.deletion,
                          gparts.deletion, main6_bound(n - 1, k, l, s));
        check_level_bound(rec, "link_level_bound", fparts.link, gparts.link,
                          restricted_universe_bound(n - 1, k - 1, l + s, s));
      } else {
        rec.add("deletion_level_bound", CheckStatus::skipped,
                "base case: n = k+l");
        rec.add("link_level_bound", CheckStatus::skipped, "base case: n = k+l");
      }
      break;
    }
    default:
      break;
  }

  return rep;
}

}  // namespace crossint
