#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossint/params.hpp"
#include "crossint/search.hpp"

namespace crossint {

/// Inclusive integer range; a single value is {v, v}.
struct Range {
  long long lo = 0;
  long long hi = 0;
};

/// Parses "a" or "a..b".
std::optional<Range> parse_range(const std::string& text);

/// A parameter sweep for one theorem. Unused dimensions stay disengaged.
struct GridSpec {
  TheoremId theorem = TheoremId::conjecture;
  std::optional<Range> n, k, t, s, l, m;
  SearchOptions search;
};

struct GridRow {
  ParamSet params;
  std::string bound;       // exact decimal
  std::string search_max;  // empty when skipped
  std::string match;       // "true" | "false" | "skip"
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct GridResult {
  std::vector<GridRow> rows;
  bool all_match = true;    // skips do not count against this
  std::size_t skipped = 0;  // cells refused by the size guard

  /// CSV with the fixed header
  /// theorem,n,k,t,s,l,m,bound,search_max,match,nodes,seconds.
  std::string to_csv(TheoremId theorem) const;
  /// Same CSV with the seconds column blanked, for byte comparisons.
  std::string to_csv_without_timing(TheoremId theorem) const;
};

/// Sweeps the grid in row-major order (n, k, t, s, l, m), runs the search on
/// every cell satisfying the theorem's preconditions, and compares the exact
/// maximum with the closed-form bound. Cells violating preconditions are
/// omitted; cells refused by the size guard are emitted with match=skip.
/// Cells may be evaluated concurrently; row order never depends on timing.
GridResult run_verify_grid(const GridSpec& spec);

}  // namespace crossint
