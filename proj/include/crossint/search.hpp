#pragma once

#include <cstdint>
#include <vector>

#include "crossint/params.hpp"
#include "crossint/set_family.hpp"

namespace crossint {

/// A maximization instance: choose a "driving" family (a fixed base plus any
/// subset of `candidates` keeping every two members intersecting in at least
/// `min_pair_intersection` elements); the partner side is then the largest
/// subfamily of `partner_candidates` meeting every chosen set. The optimum of
/// |driving| + |partner| is what the closed-form bounds cap.
///
/// Candidate lists are trace-restricted exactly when the clique hypothesis
/// licenses it (the restriction is lossless there); unconstrained searches
/// use full layers.
struct ConstraintSpec {
  TheoremId theorem;
  ParamSet params;

  int universe = 0;
  int k_driving = 0;
  int k_partner = -1;  // -1: single-family maximization
  bool driving_is_F = true;

  SetFamily base;                               // forced members (may be empty)
  std::vector<std::uint64_t> candidates;        // optional members, lex order
  std::vector<std::uint64_t> partner_candidates;  // lex order, pre-filtered vs base

  int min_pair_intersection = 0;
  bool driving_nonempty = false;
  bool partner_nonempty = false;

  bool has_partner() const { return k_partner >= 0; }

  /// Builds the instance for a theorem, validating its preconditions.
  static ConstraintSpec make(TheoremId id, const ParamSet& p);
  /// Builds the instance without theorem-level validation (diagnostics only);
  /// still requires the candidate sets to be structurally well-defined.
  static ConstraintSpec make_unchecked(TheoremId id, const ParamSet& p);
  /// Cross-intersecting pair over full layers C([n],k) x C([n],l), both
  /// families non-empty when flagged.
  static ConstraintSpec unconstrained_pair(int n, int k, int l,
                                           bool require_nonempty);
};

struct SearchOptions {
  /// Refuse instances with more driving candidates than this. 0 picks the
  /// default (24, overridable via the CROSSINT_MAX_CANDIDATES environment
  /// variable). Hard cap 62.
  std::size_t max_candidates = 0;
  /// Exhaustive 2^candidates scan instead of branch-and-bound; derives its
  /// witness independently. Capped at 30 candidates.
  bool oracle = false;
  /// Worker count for the value-finding phase; 0 = OpenMP default, 1 = serial.
  int threads = 0;
  /// Restrict the driving family to shifted families (sound for bound
  /// certification; never combine with oracle comparisons).
  bool shifted_only = false;
};

std::size_t effective_candidate_guard(const SearchOptions& opts);

struct SearchReport {
  std::uint64_t max_sum = 0;
  SetFamily witness_F;
  SetFamily witness_G;  // empty and meaningless when !has_partner
  bool has_partner = false;
  std::uint64_t nodes_explored = 0;  // deterministic: from the witness pass
  std::uint64_t pruned = 0;
  std::size_t candidate_count = 0;
  std::size_t partner_count = 0;
  bool used_oracle = false;
  double seconds = 0.0;
};

/// Exact maximum of |F| + |G| under the instance's hypotheses. The value is
/// found first (in parallel when allowed), then the witness and node counts
/// are re-derived by a deterministic sequential pass, so reports are
/// identical across runs and worker counts (the timing field aside).
SearchReport max_constrained_sum(const ConstraintSpec& spec,
                                 const SearchOptions& opts = {});

/// Maximum of |F| + |G| over cross-intersecting F in C([n],k), G in C([n],l),
/// both non-empty when flagged.
SearchReport max_cross_sum(int n, int k, int l, bool require_nonempty_f,
                           const SearchOptions& opts = {});

namespace serial {
/// Reference implementation: single-threaded value phase, same report.
SearchReport max_constrained_sum(const ConstraintSpec& spec,
                                 const SearchOptions& opts = {});
}  // namespace serial

}  // namespace crossint
