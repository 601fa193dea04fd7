// crossint: exact bounds, constructions, property checks and exhaustive
// searches for cross-intersecting set families.
//
// Exit codes: 0 success, 2 usage error, 3 precondition violation (the failing
// inequality is printed), 4 size-guard refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "crossint/bounds.hpp"
#include "crossint/constructions.hpp"
#include "crossint/family_io.hpp"
#include "crossint/grid.hpp"
#include "crossint/properties.hpp"
#include "crossint/replay.hpp"
#include "crossint/search.hpp"
#include "crossint/shifting.hpp"

namespace {

using crossint::ParamSet;
using crossint::SetFamily;
using crossint::TheoremId;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeGuard = 4;

struct ParamFlags {
  std::optional<long long> n, k, t, s, l, m;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "ground set size");
    app->add_option("--k", k, "uniformity k");
    app->add_option("--t", t, "parameter t");
    app->add_option("--s", s, "parameter s");
    app->add_option("--l", l, "uniformity l");
    app->add_option("--m", m, "prefix length m");
  }

  ParamSet to_params() const {
    ParamSet p;
    p.n = n;
    p.k = k;
    p.t = t;
    p.s = s;
    p.l = l;
    p.m = m;
    return p;
  }
};

ordered_json params_json(const ParamSet& p) {
  ordered_json j = ordered_json::object();
  if (p.n) j["n"] = *p.n;
  if (p.k) j["k"] = *p.k;
  if (p.t) j["t"] = *p.t;
  if (p.s) j["s"] = *p.s;
  if (p.l) j["l"] = *p.l;
  if (p.m) j["m"] = *p.m;
  return j;
}

ordered_json family_json(const SetFamily& fam) {
  ordered_json arr = ordered_json::array();
  for (const auto& elems : fam.element_lists()) arr.push_back(elems);
  return arr;
}

ordered_json set_json(std::uint64_t mask, int n) {
  return ordered_json(crossint::ElementSet::from_mask(mask, n).elements());
}

void emit_family(const SetFamily& fam, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << crossint::family_to_text(fam);
  } else {
    crossint::family_to_file(fam, out_path);
  }
}

TheoremId parse_theorem_or_throw(const std::string& name) {
  auto id = crossint::theorem_from_string(name);
  if (!id) {
    throw CLI::ValidationError("--theorem",
                               "unknown theorem '" + name + "'");
  }
  return *id;
}

ordered_json report_json(TheoremId theorem, const ParamSet& params,
                         const crossint::SearchReport& rep) {
  ordered_json j;
  j["theorem"] = std::string(crossint::theorem_name(theorem));
  j["params"] = params_json(params);
  j["max_sum"] = rep.max_sum;
  j["witness_F"] = family_json(rep.witness_F);
  if (rep.has_partner) j["witness_G"] = family_json(rep.witness_G);
  j["candidates"] = rep.candidate_count;
  j["partner_candidates"] = rep.partner_count;
  j["nodes_explored"] = rep.nodes_explored;
  j["pruned"] = rep.pruned;
  j["oracle"] = rep.used_oracle;
  j["seconds"] = rep.seconds;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for cross-intersecting families"};
  app.require_subcommand(1);

  // ---- bound ----
  auto* bound_cmd = app.add_subcommand(
      "bound", "evaluate a closed-form bound in exact integer arithmetic");
  std::string formula_name;
  ParamFlags bound_params;
  bound_cmd->add_option("--formula", formula_name, "formula id")->required();
  bound_params.attach(bound_cmd);

  // ---- construct ----
  auto* construct_cmd =
      app.add_subcommand("construct", "build a named family, print as text");
  std::string kind;
  ParamFlags construct_params;
  std::optional<int> construct_x;
  std::optional<std::uint64_t> construct_r;
  std::string construct_out;
  construct_cmd->add_option("--kind", kind, "star|clique|lex_segment|f0|g0|restricted|main6_F|main6_G")
      ->required();
  construct_params.attach(construct_cmd);
  construct_cmd->add_option("--x", construct_x, "star centre element");
  construct_cmd->add_option("--r", construct_r, "lex segment length");
  construct_cmd->add_option("--out", construct_out, "output file (default stdout)");

  // ---- check ----
  auto* check_cmd = app.add_subcommand(
      "check", "evaluate predicates on a family, one JSON object per predicate");
  std::string check_file, cross_file;
  std::optional<int> check_t, check_clique, check_trace;
  bool check_star = false, check_shifted = false;
  check_cmd->add_option("--file", check_file, "family file")->required();
  check_cmd->add_option("--t-intersecting", check_t, "check t-intersecting at this t");
  check_cmd->add_option("--cross-with", cross_file, "check cross-intersection with this family");
  check_cmd->add_option("--clique", check_clique, "check containment of all k-subsets of [m]");
  check_cmd->add_flag("--star", check_star, "check for a common element");
  check_cmd->add_option("--trace", check_trace, "report min trace on [m]");
  check_cmd->add_flag("--shifted", check_shifted, "check shiftedness");

  // ---- shift ----
  auto* shift_cmd = app.add_subcommand("shift", "apply shifting operators");
  std::string shift_file, shift_out;
  std::optional<int> shift_i, shift_j;
  bool shift_canonical = false;
  shift_cmd->add_option("--file", shift_file, "family file")->required();
  shift_cmd->add_option("--i", shift_i, "shift target i (requires --j)");
  shift_cmd->add_option("--j", shift_j, "shift source j");
  shift_cmd->add_flag("--canonical", shift_canonical,
                      "apply shifts to a fixed point in canonical scan order");
  shift_cmd->add_option("--out", shift_out, "output file (default stdout)");

  // ---- search ----
  auto* search_cmd = app.add_subcommand(
      "search", "exact maximum of |F|+|G| under a theorem's hypotheses");
  std::string search_theorem;
  ParamFlags search_params;
  bool search_oracle = false, search_shifted_only = false, allow_empty = false;
  int search_threads = 0;
  search_cmd->add_option("--theorem", search_theorem, "theorem id")->required();
  search_params.attach(search_cmd);
  search_cmd->add_flag("--oracle", search_oracle,
                       "run the plain exhaustive 2^candidates scan");
  search_cmd->add_flag("--shifted-only", search_shifted_only,
                       "restrict the driving family to shifted families");
  search_cmd->add_flag("--allow-empty", allow_empty,
                       "drop the non-emptiness requirement (hm_pair/ft_pair)");
  search_cmd->add_option("--threads", search_threads, "worker count (0 = default)");

  // ---- replay ----
  auto* replay_cmd = app.add_subcommand(
      "replay", "replay one induction level on a concrete pair of families");
  std::string replay_theorem, replay_f, replay_g;
  ParamFlags replay_params;
  replay_cmd->add_option("--theorem", replay_theorem, "conjecture|main2|main6")
      ->required();
  replay_cmd->add_option("--f", replay_f, "family file for F")->required();
  replay_cmd->add_option("--g", replay_g, "family file for G")->required();
  replay_params.attach(replay_cmd);

  // ---- verify-grid ----
  auto* grid_cmd = app.add_subcommand(
      "verify-grid", "sweep a parameter grid, compare search maxima with bounds");
  std::string grid_theorem;
  std::string grid_n, grid_k, grid_t, grid_s, grid_l, grid_m;
  std::string grid_out;
  int grid_threads = 0;
  bool grid_oracle = false;
  grid_cmd->add_option("--theorem", grid_theorem, "theorem id")->required();
  grid_cmd->add_option("--n", grid_n, "range a..b or single value");
  grid_cmd->add_option("--k", grid_k, "range");
  grid_cmd->add_option("--t", grid_t, "range");
  grid_cmd->add_option("--s", grid_s, "range");
  grid_cmd->add_option("--l", grid_l, "range");
  grid_cmd->add_option("--m", grid_m, "range");
  grid_cmd->add_option("--out", grid_out, "CSV output file (default stdout)");
  grid_cmd->add_option("--threads", grid_threads, "worker count (0 = default)");
  grid_cmd->add_flag("--oracle", grid_oracle, "use the exhaustive oracle per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (bound_cmd->parsed()) {
    auto formula = crossint::formula_from_string(formula_name);
    if (!formula) {
      std::cerr << "unknown formula '" << formula_name << "'\n";
      return kExitUsage;
    }
    ParamSet p = bound_params.to_params();
    crossint::BigNat value = crossint::evaluate_formula(*formula, p);
    std::cout << value.str() << "\n";
    ordered_json j;
    j["formula"] = formula_name;
    j["params"] = params_json(p);
    j["value"] = value.str();
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  if (construct_cmd->parsed()) {
    SetFamily fam = crossint::construct(kind, construct_params.to_params(),
                                        construct_x, construct_r);
    emit_family(fam, construct_out);
    return kExitOk;
  }

  if (check_cmd->parsed()) {
    SetFamily fam = crossint::family_from_file(check_file);
    int n = fam.universe();
    if (check_t) {
      auto viol = crossint::find_t_violation(fam, *check_t);
      ordered_json j;
      j["predicate"] = "t_intersecting";
      j["t"] = *check_t;
      j["holds"] = !viol.has_value();
      j["witness"] = ordered_json::array();
      if (viol) {
        j["witness"].push_back(set_json(viol->first, n));
        j["witness"].push_back(set_json(viol->second, n));
      }
      std::cout << j.dump() << "\n";
    }
    if (!cross_file.empty()) {
      SetFamily other = crossint::family_from_file(cross_file);
      auto viol = crossint::find_cross_violation(fam, other);
      ordered_json j;
      j["predicate"] = "cross_intersecting";
      j["holds"] = !viol.has_value();
      j["witness"] = ordered_json::array();
      if (viol) {
        j["witness"].push_back(set_json(viol->first, n));
        j["witness"].push_back(set_json(viol->second, n));
      }
      std::cout << j.dump() << "\n";
    }
    if (check_clique) {
      auto missing = crossint::find_missing_clique_member(fam, *check_clique);
      ordered_json j;
      j["predicate"] = "clique";
      j["m"] = *check_clique;
      j["holds"] = !missing.has_value();
      j["witness"] = ordered_json::array();
      if (missing) j["witness"].push_back(set_json(*missing, n));
      std::cout << j.dump() << "\n";
    }
    if (check_star) {
      auto x = crossint::is_star_subfamily(fam);
      ordered_json j;
      j["predicate"] = "star";
      j["holds"] = x.has_value();
      j["witness"] = ordered_json::array();
      if (x) j["witness"].push_back(*x);
      std::cout << j.dump() << "\n";
    }
    if (check_trace) {
      ordered_json j;
      j["predicate"] = "trace_profile";
      j["m"] = *check_trace;
      j["value"] = crossint::trace_profile(fam, *check_trace);
      std::cout << j.dump() << "\n";
    }
    if (check_shifted) {
      auto w = crossint::find_unshifted_witness(fam);
      ordered_json j;
      j["predicate"] = "shifted";
      j["holds"] = !w.has_value();
      j["witness"] = ordered_json::array();
      if (w) {
        j["witness"].push_back(set_json(w->member, n));
        j["witness"].push_back(ordered_json{w->i, w->j});
      }
      std::cout << j.dump() << "\n";
    }
    return kExitOk;
  }

  if (shift_cmd->parsed()) {
    SetFamily fam = crossint::family_from_file(shift_file);
    if (shift_canonical == shift_i.has_value()) {
      std::cerr << "shift: give either --canonical or both --i and --j\n";
      return kExitUsage;
    }
    SetFamily out;
    if (shift_canonical) {
      out = crossint::shift_to_canonical(fam);
    } else {
      if (!shift_j) {
        std::cerr << "shift: --i requires --j\n";
        return kExitUsage;
      }
      out = crossint::shift_family(fam, *shift_i, *shift_j);
    }
    emit_family(out, shift_out);
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    TheoremId id = parse_theorem_or_throw(search_theorem);
    ParamSet p = search_params.to_params();
    crossint::SearchOptions opts;
    opts.oracle = search_oracle;
    opts.threads = search_threads;
    opts.shifted_only = search_shifted_only;
    crossint::SearchReport rep;
    if (allow_empty) {
      if (id != TheoremId::hm_pair && id != TheoremId::ft_pair) {
        std::cerr << "search: --allow-empty applies to hm_pair/ft_pair only\n";
        return kExitUsage;
      }
      crossint::require_theorem_params(id, p);
      int n = static_cast<int>(*p.n), k = static_cast<int>(*p.k);
      int l = (id == TheoremId::ft_pair) ? static_cast<int>(*p.l) : k;
      rep = crossint::max_cross_sum(n, k, l, false, opts);
    } else {
      rep = crossint::max_constrained_sum(crossint::ConstraintSpec::make(id, p),
                                          opts);
    }
    std::cout << report_json(id, p, rep).dump() << "\n";
    return kExitOk;
  }

  if (replay_cmd->parsed()) {
    TheoremId id = parse_theorem_or_throw(replay_theorem);
    SetFamily f = crossint::family_from_file(replay_f);
    SetFamily g = crossint::family_from_file(replay_g);
    crossint::ReplayReport rep =
        crossint::induction_replay(f, g, id, replay_params.to_params());
    ordered_json j;
    j["theorem"] = std::string(crossint::theorem_name(id));
    j["params"] = params_json(replay_params.to_params());
    j["canonicalized"] =
        ordered_json{{"f_changed", rep.f_changed_by_canonicalization},
                     {"g_changed", rep.g_changed_by_canonicalization}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = std::string(crossint::check_status_name(c.status));
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_passed"] = rep.all_passed();
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  if (grid_cmd->parsed()) {
    crossint::GridSpec spec;
    spec.theorem = parse_theorem_or_throw(grid_theorem);
    auto set_range = [](const std::string& text, std::optional<crossint::Range>& out,
                        const char* name) {
      if (text.empty()) return true;
      out = crossint::parse_range(text);
      if (!out) {
        std::cerr << "verify-grid: bad range for --" << name << ": '" << text
                  << "'\n";
        return false;
      }
      return true;
    };
    if (!set_range(grid_n, spec.n, "n") || !set_range(grid_k, spec.k, "k") ||
        !set_range(grid_t, spec.t, "t") || !set_range(grid_s, spec.s, "s") ||
        !set_range(grid_l, spec.l, "l") || !set_range(grid_m, spec.m, "m")) {
      return kExitUsage;
    }
    spec.search.threads = grid_threads;
    spec.search.oracle = grid_oracle;
    crossint::GridResult result = crossint::run_verify_grid(spec);
    std::string csv = result.to_csv(spec.theorem);
    if (grid_out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(grid_out);
      if (!out) {
        std::cerr << "verify-grid: cannot write " << grid_out << "\n";
        return kExitUsage;
      }
      out << csv;
    }
    return result.all_match ? kExitOk : 1;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const crossint::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const crossint::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
