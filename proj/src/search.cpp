#include "crossint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <string>

#include "crossint/errors.hpp"
#include "crossint/parallel.hpp"
#include "crossint/subsets.hpp"

namespace crossint {

namespace {

constexpr std::size_t kHardCandidateCap = 62;
constexpr std::size_t kOracleCandidateCap = 30;
constexpr std::size_t kDefaultCandidateGuard = 24;
constexpr std::uint64_t kLayerScanGuard = std::uint64_t{1} << 26;

long long need(const std::optional<long long>& v, const char* name) {
  if (!v) {
    throw PreconditionError(std::string("search: missing parameter ") + name);
  }
  return *v;
}

void check_layer(int n, int k) {
  if (layer_size(n, k) > kLayerScanGuard) {
    throw SizeGuardError("search: layer C(" + std::to_string(n) + "," +
                         std::to_string(k) + ") too large to enumerate");
  }
}

std::vector<std::uint64_t> trace_masks(int n, int k, int m, int threshold) {
  check_layer(n, k);
  std::uint64_t pm = prefix_mask(std::min(m, n));
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k, [&](std::uint64_t a) {
    if (std::popcount(a & pm) >= threshold) out.push_back(a);
  });
  return out;
}

std::vector<std::uint64_t> full_layer(int n, int k) {
  check_layer(n, k);
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k, [&](std::uint64_t a) { out.push_back(a); });
  return out;
}

// keep only sets meeting every base member in >= threshold elements
void filter_against_base(std::vector<std::uint64_t>& sets,
                         const SetFamily& base, int threshold) {
  if (base.is_empty() || threshold <= 0) return;
  std::erase_if(sets, [&](std::uint64_t a) {
    for (std::uint64_t b : base.masks()) {
      if (std::popcount(a & b) < threshold) return true;
    }
    return false;
  });
}

void drop_base_members(std::vector<std::uint64_t>& sets, const SetFamily& base) {
  std::erase_if(sets, [&](std::uint64_t a) { return base.contains(a); });
}

// b dominated by a: r-th smallest of b <= r-th smallest of a (equal sizes)
bool dominated_by(std::uint64_t b, std::uint64_t a) {
  while (b != 0) {
    if (a == 0) return false;
    if (std::countr_zero(b) > std::countr_zero(a)) return false;
    b &= b - 1;
    a &= a - 1;
  }
  return true;
}

ConstraintSpec build_spec(TheoremId id, const ParamSet& p, bool validate) {
  if (validate) require_theorem_params(id, p);
  ConstraintSpec spec;
  spec.theorem = id;
  spec.params = p;
  switch (id) {
    case TheoremId::hm_pair: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k"));
      return ConstraintSpec::unconstrained_pair(n, k, k, true);
    }
    case TheoremId::ft_pair: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          l = static_cast<int>(need(p.l, "l"));
      ConstraintSpec s = ConstraintSpec::unconstrained_pair(n, k, l, true);
      s.theorem = id;
      s.params = p;
      return s;
    }
    case TheoremId::frankl_i:
    case TheoremId::frankl_ii: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          t = static_cast<int>(need(p.t, "t"));
      spec.universe = n;
      spec.k_driving = k + t;
      spec.k_partner = k;
      spec.base = SetFamily::empty(n, k + t);
      spec.candidates = full_layer(n, k + t);
      spec.partner_candidates = full_layer(n, k);
      if (id == TheoremId::frankl_i) {
        spec.min_pair_intersection = t;
      } else {
        spec.min_pair_intersection = t + 1;
        spec.driving_nonempty = true;
      }
      return spec;
    }
    case TheoremId::conjecture: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          t = static_cast<int>(need(p.t, "t")), s = static_cast<int>(need(p.s, "s"));
      int m = k + t + s;
      spec.universe = n;
      spec.k_driving = k + t;
      spec.k_partner = k;
      spec.min_pair_intersection = t + 1;
      spec.base = SetFamily::make(n, k + t, full_layer(std::min(m, n), k + t));
      spec.candidates = trace_masks(n, k + t, m, t + s + 1);
      drop_base_members(spec.candidates, spec.base);
      filter_against_base(spec.candidates, spec.base, t + 1);
      spec.partner_candidates = trace_masks(n, k, m, s + 1);
      filter_against_base(spec.partner_candidates, spec.base, 1);
      return spec;
    }
    case TheoremId::main2: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          t = static_cast<int>(need(p.t, "t")), s = static_cast<int>(need(p.s, "s")),
          m = static_cast<int>(need(p.m, "m"));
      spec.universe = n;
      spec.k_driving = k + t;
      spec.k_partner = k;
      spec.min_pair_intersection = t;
      spec.base = SetFamily::empty(n, k + t);
      spec.candidates = trace_masks(n, k + t, m, t + s + 1);
      spec.partner_candidates = trace_masks(n, k, m, s + 1);
      return spec;
    }
    case TheoremId::main6: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          l = static_cast<int>(need(p.l, "l")), s = static_cast<int>(need(p.s, "s"));
      spec.universe = n;
      spec.driving_is_F = false;  // the constrained side is G
      spec.k_driving = l;
      spec.k_partner = k;
      spec.min_pair_intersection = 1;
      spec.base = SetFamily::make(n, l, full_layer(std::min(l + s, n), l));
      spec.candidates = trace_masks(n, l, l + s, s + 1);
      drop_base_members(spec.candidates, spec.base);
      filter_against_base(spec.candidates, spec.base, 1);
      spec.partner_candidates = trace_masks(n, k, l + s, s + 1);
      filter_against_base(spec.partner_candidates, spec.base, 1);
      return spec;
    }
    case TheoremId::h: {
      int n = static_cast<int>(need(p.n, "n")), k = static_cast<int>(need(p.k, "k")),
          m = static_cast<int>(need(p.m, "m"));
      spec.universe = n;
      spec.k_driving = k;
      spec.k_partner = -1;
      spec.min_pair_intersection = 1;
      spec.base = SetFamily::make(n, k, full_layer(std::min(m, n), k));
      spec.candidates = trace_masks(n, k, m, m - k + 1);
      drop_base_members(spec.candidates, spec.base);
      filter_against_base(spec.candidates, spec.base, 1);
      return spec;
    }
  }
  throw PreconditionError("search: unknown theorem id");
}

// Precomputed bit tables over candidate indices.
struct Tables {
  std::vector<std::uint64_t> incompat;  // per candidate: pairwise conflicts
  std::vector<std::uint64_t> kill;      // per partner: candidates disjoint from it
  std::vector<std::uint64_t> dom_req;   // per candidate: dominated candidates
  std::vector<char> impossible;         // shifted mode: closure leaves the list
  bool use_dom = false;
};

Tables build_tables(const ConstraintSpec& spec, bool shifted_only) {
  Tables t;
  const auto& cand = spec.candidates;
  std::size_t nc = cand.size();
  t.incompat.assign(nc, 0);
  if (spec.min_pair_intersection > 0) {
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = i + 1; j < nc; ++j) {
        if (std::popcount(cand[i] & cand[j]) < spec.min_pair_intersection) {
          t.incompat[i] |= std::uint64_t{1} << j;
          t.incompat[j] |= std::uint64_t{1} << i;
        }
      }
    }
  }
  t.kill.assign(spec.partner_candidates.size(), 0);
  for (std::size_t pi = 0; pi < spec.partner_candidates.size(); ++pi) {
    for (std::size_t i = 0; i < nc; ++i) {
      if ((spec.partner_candidates[pi] & cand[i]) == 0) {
        t.kill[pi] |= std::uint64_t{1} << i;
      }
    }
  }
  if (shifted_only) {
    t.use_dom = true;
    t.dom_req.assign(nc, 0);
    t.impossible.assign(nc, 0);
    // All sets dominated by a candidate keep or raise trace on any prefix, so
    // the closure of a driving family stays within base + candidates unless a
    // dominated set was dropped by a base-compatibility filter.
    std::vector<std::uint64_t> layer = full_layer(spec.universe, spec.k_driving);
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (dominated_by(cand[j], cand[i])) {
          t.dom_req[i] |= std::uint64_t{1} << j;
        }
      }
      for (std::uint64_t other : layer) {
        if (other == cand[i] || !dominated_by(other, cand[i])) continue;
        if (!spec.base.contains(other) &&
            !std::binary_search(cand.begin(), cand.end(), other, lex_less)) {
          t.impossible[i] = 1;
          break;
        }
      }
    }
  }
  return t;
}

struct Instance {
  const ConstraintSpec& spec;
  const Tables& tables;
  std::size_t nc;
  std::uint64_t base_size;

  bool can_include(std::size_t idx, std::uint64_t chosen) const {
    if (tables.incompat[idx] & chosen) return false;
    if (tables.use_dom) {
      if (tables.impossible[idx]) return false;
      if (tables.dom_req[idx] & ~chosen) return false;
    }
    return true;
  }

  std::size_t partner_alive(std::uint64_t chosen) const {
    std::size_t alive = 0;
    for (std::uint64_t kmask : tables.kill) {
      if ((kmask & chosen) == 0) ++alive;
    }
    return alive;
  }

  // -1 when the leaf violates a non-emptiness requirement.
  std::int64_t leaf_total(std::uint64_t chosen_count, std::size_t alive) const {
    if (spec.driving_nonempty && base_size + chosen_count == 0) return -1;
    if (spec.partner_nonempty && alive == 0) return -1;
    return static_cast<std::int64_t>(base_size + chosen_count + alive);
  }
};

// ---- value phase ----------------------------------------------------------

struct ValueSearch {
  const Instance& ins;
  std::atomic<std::uint64_t>* shared_best_p1;  // best total + 1; 0 = none yet
  std::uint64_t local_best_p1 = 0;

  std::uint64_t current_best_p1() const {
    std::uint64_t g = shared_best_p1
                          ? shared_best_p1->load(std::memory_order_relaxed)
                          : 0;
    return std::max(g, local_best_p1);
  }

  void offer(std::uint64_t total) {
    std::uint64_t p1 = total + 1;
    if (p1 > local_best_p1) local_best_p1 = p1;
    if (shared_best_p1) {
      std::uint64_t cur = shared_best_p1->load(std::memory_order_relaxed);
      while (p1 > cur && !shared_best_p1->compare_exchange_weak(
                             cur, p1, std::memory_order_relaxed)) {
      }
    }
  }

  void dfs(std::size_t idx, std::uint64_t chosen, std::uint64_t cc,
           const std::vector<std::uint32_t>& alive) {
    std::uint64_t best_p1 = current_best_p1();
    std::uint64_t ub =
        ins.base_size + cc + (ins.nc - idx) + alive.size();
    if (best_p1 != 0 && ub + 1 <= best_p1) return;
    if (ins.spec.partner_nonempty && alive.empty()) return;
    if (idx == ins.nc) {
      std::int64_t total = ins.leaf_total(cc, alive.size());
      if (total >= 0) offer(static_cast<std::uint64_t>(total));
      return;
    }
    if (ins.can_include(idx, chosen)) {
      std::vector<std::uint32_t> next;
      next.reserve(alive.size());
      for (std::uint32_t p : alive) {
        if ((ins.tables.kill[p] >> idx & 1) == 0) next.push_back(p);
      }
      dfs(idx + 1, chosen | (std::uint64_t{1} << idx), cc + 1, next);
    }
    dfs(idx + 1, chosen, cc, alive);
  }
};

std::vector<std::uint32_t> alive_for(const Instance& ins, std::uint64_t chosen) {
  std::vector<std::uint32_t> alive;
  alive.reserve(ins.tables.kill.size());
  for (std::size_t p = 0; p < ins.tables.kill.size(); ++p) {
    if ((ins.tables.kill[p] & chosen) == 0) {
      alive.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return alive;
}

// Cheap feasible leaves to seed the incumbent: taking no candidate at all
// (often already optimal under a clique base) and taking just the first one.
std::uint64_t warm_start_p1(const Instance& ins) {
  std::uint64_t best_p1 = 0;
  std::int64_t empty_leaf = ins.leaf_total(0, ins.tables.kill.size());
  if (empty_leaf >= 0) {
    best_p1 = static_cast<std::uint64_t>(empty_leaf) + 1;
  }
  if (ins.nc > 0 && ins.can_include(0, 0)) {
    std::size_t alive = ins.partner_alive(std::uint64_t{1});
    std::int64_t single_leaf = ins.leaf_total(1, alive);
    if (single_leaf >= 0) {
      best_p1 =
          std::max(best_p1, static_cast<std::uint64_t>(single_leaf) + 1);
    }
  }
  return best_p1;
}

std::uint64_t find_value_serial(const Instance& ins) {
  ValueSearch vs{ins, nullptr};
  vs.local_best_p1 = warm_start_p1(ins);
  vs.dfs(0, 0, 0, alive_for(ins, 0));
  if (vs.local_best_p1 == 0) {
    throw std::runtime_error("search: no feasible family under the constraints");
  }
  return vs.local_best_p1 - 1;
}

struct FrontierNode {
  std::size_t idx;
  std::uint64_t chosen;
  std::uint64_t cc;
};

std::uint64_t find_value_parallel(const Instance& ins, int threads) {
  std::deque<FrontierNode> frontier;
  frontier.push_back({0, 0, 0});
  std::size_t want = static_cast<std::size_t>(threads) * 8;
  while (frontier.size() < want && frontier.front().idx < ins.nc) {
    FrontierNode node = frontier.front();
    frontier.pop_front();
    if (ins.can_include(node.idx, node.chosen)) {
      frontier.push_back({node.idx + 1,
                          node.chosen | (std::uint64_t{1} << node.idx),
                          node.cc + 1});
    }
    frontier.push_back({node.idx + 1, node.chosen, node.cc});
  }
  std::vector<FrontierNode> work(frontier.begin(), frontier.end());
  std::atomic<std::uint64_t> best_p1{warm_start_p1(ins)};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t w = 0; w < work.size(); ++w) {
    ValueSearch vs{ins, &best_p1};
    vs.dfs(work[w].idx, work[w].chosen, work[w].cc,
           alive_for(ins, work[w].chosen));
  }
  std::uint64_t p1 = best_p1.load();
  if (p1 == 0) {
    throw std::runtime_error("search: no feasible family under the constraints");
  }
  return p1 - 1;
}

// ---- deterministic witness + node accounting ------------------------------

struct WitnessSearch {
  const Instance& ins;
  std::uint64_t opt;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  bool found = false;
  std::uint64_t witness_chosen = 0;

  // Include-first depth-first scan; the first leaf attaining `opt` is the
  // canonical witness (ties resolved toward including earlier candidates).
  void dfs(std::size_t idx, std::uint64_t chosen, std::uint64_t cc,
           const std::vector<std::uint32_t>& alive) {
    if (found) return;
    ++nodes;
    std::uint64_t ub = ins.base_size + cc + (ins.nc - idx) + alive.size();
    if (ub < opt || (ins.spec.partner_nonempty && alive.empty())) {
      ++pruned;
      return;
    }
    if (idx == ins.nc) {
      std::int64_t total = ins.leaf_total(cc, alive.size());
      if (total >= 0 && static_cast<std::uint64_t>(total) == opt) {
        found = true;
        witness_chosen = chosen;
      }
      return;
    }
    if (ins.can_include(idx, chosen)) {
      std::vector<std::uint32_t> next;
      next.reserve(alive.size());
      for (std::uint32_t p : alive) {
        if ((ins.tables.kill[p] >> idx & 1) == 0) next.push_back(p);
      }
      dfs(idx + 1, chosen | (std::uint64_t{1} << idx), cc + 1, next);
    }
    dfs(idx + 1, chosen, cc, alive);
  }
};

// ---- oracle: plain 2^candidates scan --------------------------------------

struct OracleResult {
  bool any = false;
  std::uint64_t best = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t infeasible = 0;
};

// Preference between two maximizer subsets: at the lowest differing candidate
// index, the subset that includes it wins. This reproduces the include-first
// depth-first tie-breaking of the witness pass.
bool prefer_mask(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

OracleResult oracle_scan_range(const Instance& ins, std::uint64_t lo,
                               std::uint64_t hi) {
  OracleResult r;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++r.evaluated;
    bool ok = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
      if (!ins.can_include(i, mask & ((std::uint64_t{1} << i) - 1)) ||
          (ins.tables.incompat[i] & mask)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++r.infeasible;
      continue;
    }
    std::size_t alive = ins.partner_alive(mask);
    std::int64_t total =
        ins.leaf_total(static_cast<std::uint64_t>(std::popcount(mask)), alive);
    if (total < 0) {
      ++r.infeasible;
      continue;
    }
    std::uint64_t tv = static_cast<std::uint64_t>(total);
    if (!r.any || tv > r.best ||
        (tv == r.best && prefer_mask(mask, r.best_mask))) {
      r.any = true;
      r.best = tv;
      r.best_mask = mask;
    }
  }
  return r;
}

OracleResult oracle_scan(const Instance& ins, int threads) {
  std::uint64_t limit = std::uint64_t{1} << ins.nc;
  if (threads <= 1 || limit < (1u << 12)) {
    return oracle_scan_range(ins, 0, limit);
  }
  std::uint64_t chunks = static_cast<std::uint64_t>(threads) * 8;
  std::uint64_t step = (limit + chunks - 1) / chunks;
  std::vector<OracleResult> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t lo = c * step;
    std::uint64_t hi = std::min(limit, lo + step);
    if (lo < hi) parts[c] = oracle_scan_range(ins, lo, hi);
  }
  OracleResult merged;
  for (const OracleResult& part : parts) {
    merged.evaluated += part.evaluated;
    merged.infeasible += part.infeasible;
    if (!part.any) continue;
    if (!merged.any || part.best > merged.best ||
        (part.best == merged.best && prefer_mask(part.best_mask, merged.best_mask))) {
      merged.any = true;
      merged.best = part.best;
      merged.best_mask = part.best_mask;
    }
  }
  return merged;
}

// ---- report assembly -------------------------------------------------------

SearchReport assemble(const ConstraintSpec& spec, const Instance& ins,
                      std::uint64_t opt, std::uint64_t chosen,
                      std::uint64_t nodes, std::uint64_t pruned,
                      bool used_oracle) {
  std::vector<std::uint64_t> driving = spec.base.masks();
  for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
    driving.push_back(spec.candidates[std::countr_zero(rest)]);
  }
  SetFamily drive_fam =
      SetFamily::make(spec.universe, spec.k_driving, std::move(driving));

  SearchReport rep;
  rep.max_sum = opt;
  rep.has_partner = spec.has_partner();
  rep.nodes_explored = nodes;
  rep.pruned = pruned;
  rep.candidate_count = spec.candidates.size();
  rep.partner_count = spec.partner_candidates.size();
  rep.used_oracle = used_oracle;
  if (spec.has_partner()) {
    std::vector<std::uint64_t> partner;
    for (std::size_t p = 0; p < spec.partner_candidates.size(); ++p) {
      if ((ins.tables.kill[p] & chosen) == 0) {
        partner.push_back(spec.partner_candidates[p]);
      }
    }
    SetFamily partner_fam =
        SetFamily::make(spec.universe, spec.k_partner, std::move(partner));
    if (spec.driving_is_F) {
      rep.witness_F = std::move(drive_fam);
      rep.witness_G = std::move(partner_fam);
    } else {
      rep.witness_F = std::move(partner_fam);
      rep.witness_G = std::move(drive_fam);
    }
  } else {
    rep.witness_F = std::move(drive_fam);
    rep.witness_G = SetFamily::empty(spec.universe, 0);
  }
  return rep;
}

SearchReport run_search(const ConstraintSpec& spec, const SearchOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  std::size_t guard = effective_candidate_guard(opts);
  std::size_t nc = spec.candidates.size();
  if (nc > guard) {
    throw SizeGuardError(
        "search: " + std::to_string(nc) + " candidates exceed the guard of " +
        std::to_string(guard) + " (set CROSSINT_MAX_CANDIDATES to raise it)");
  }
  if (opts.oracle && nc > kOracleCandidateCap) {
    throw SizeGuardError("search: oracle mode is capped at " +
                         std::to_string(kOracleCandidateCap) + " candidates (" +
                         std::to_string(nc) + " present)");
  }
  Tables tables = build_tables(spec, opts.shifted_only);
  Instance ins{spec, tables, nc, spec.base.size()};

  SearchReport rep;
  if (opts.oracle) {
    OracleResult r = oracle_scan(ins, resolve_threads(opts.threads));
    if (!r.any) {
      throw std::runtime_error("search: no feasible family under the constraints");
    }
    rep = assemble(spec, ins, r.best, r.best_mask, r.evaluated, r.infeasible,
                   true);
  } else {
    int threads = resolve_threads(opts.threads);
    std::uint64_t opt = (threads <= 1 || nc < 10)
                            ? find_value_serial(ins)
                            : find_value_parallel(ins, threads);
    WitnessSearch ws{ins, opt};
    ws.dfs(0, 0, 0, alive_for(ins, 0));
    if (!ws.found) {
      throw std::runtime_error("search: witness pass failed to reach the optimum");
    }
    rep = assemble(spec, ins, opt, ws.witness_chosen, ws.nodes, ws.pruned, false);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  return rep;
}

}  // namespace

std::size_t effective_candidate_guard(const SearchOptions& opts) {
  std::size_t guard = opts.max_candidates;
  if (guard == 0) {
    guard = kDefaultCandidateGuard;
    if (const char* env = std::getenv("CROSSINT_MAX_CANDIDATES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) guard = static_cast<std::size_t>(v);
    }
  }
  return std::min(guard, kHardCandidateCap);
}

ConstraintSpec ConstraintSpec::make(TheoremId id, const ParamSet& p) {
  return build_spec(id, p, true);
}

ConstraintSpec ConstraintSpec::make_unchecked(TheoremId id, const ParamSet& p) {
  return build_spec(id, p, false);
}

ConstraintSpec ConstraintSpec::unconstrained_pair(int n, int k, int l,
                                                  bool require_nonempty) {
  ConstraintSpec spec;
  spec.theorem = (k == l) ? TheoremId::hm_pair : TheoremId::ft_pair;
  spec.params.n = n;
  spec.params.k = k;
  if (k != l) spec.params.l = l;
  spec.universe = n;
  spec.k_driving = k;
  spec.k_partner = l;
  spec.base = SetFamily::empty(n, k);
  spec.candidates = full_layer(n, k);
  spec.partner_candidates = full_layer(n, l);
  spec.min_pair_intersection = 0;
  spec.driving_nonempty = require_nonempty;
  spec.partner_nonempty = require_nonempty;
  return spec;
}

SearchReport max_constrained_sum(const ConstraintSpec& spec,
                                 const SearchOptions& opts) {
  return run_search(spec, opts);
}

SearchReport max_cross_sum(int n, int k, int l, bool require_nonempty_f,
                           const SearchOptions& opts) {
  if (n < k + l) {
    throw PreconditionError("max_cross_sum: n >= k+l violated (n=" +
                            std::to_string(n) + ", k+l=" + std::to_string(k + l) +
                            ")");
  }
  return run_search(ConstraintSpec::unconstrained_pair(n, k, l, require_nonempty_f),
                    opts);
}

namespace serial {

SearchReport max_constrained_sum(const ConstraintSpec& spec,
                                 const SearchOptions& opts) {
  SearchOptions o = opts;
  o.threads = 1;
  return run_search(spec, o);
}

}  // namespace serial

}  // namespace crossint
