#include "crossint/grid.hpp"

#include <cstdio>
#include <sstream>

#include "crossint/bounds.hpp"
#include "crossint/errors.hpp"
#include "crossint/parallel.hpp"

namespace crossint {

namespace {

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string();
}

void append_row(std::ostringstream& os, TheoremId theorem, const GridRow& row,
                bool with_timing) {
  os << theorem_name(theorem) << "," << opt_str(row.params.n) << ","
     << opt_str(row.params.k) << "," << opt_str(row.params.t) << ","
     << opt_str(row.params.s) << "," << opt_str(row.params.l) << ","
     << opt_str(row.params.m) << "," << row.bound << "," << row.search_max << ","
     << row.match << "," << row.nodes << ",";
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", row.seconds);
    os << buf;
  }
  os << "\n";
}

std::string render_csv(TheoremId theorem, const std::vector<GridRow>& rows,
                       bool with_timing) {
  std::ostringstream os;
  os << "theorem,n,k,t,s,l,m,bound,search_max,match,nodes,seconds\n";
  for (const GridRow& row : rows) append_row(os, theorem, row, with_timing);
  return os.str();
}

std::vector<long long> expand(const std::optional<Range>& r) {
  if (!r) return {0};  // placeholder; the dimension is unused
  std::vector<long long> out;
  for (long long v = r->lo; v <= r->hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::optional<Range> parse_range(const std::string& text) {
  auto parse_ll = [](const std::string& s, long long& out) {
    try {
      std::size_t pos = 0;
      out = std::stoll(s, &pos);
      return pos == s.size();
    } catch (const std::exception&) {
      return false;
    }
  };
  std::size_t dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    if (!parse_ll(text, r.lo)) return std::nullopt;
    r.hi = r.lo;
    return r;
  }
  if (!parse_ll(text.substr(0, dots), r.lo) ||
      !parse_ll(text.substr(dots + 2), r.hi) || r.hi < r.lo) {
    return std::nullopt;
  }
  return r;
}

std::string GridResult::to_csv(TheoremId theorem) const {
  return render_csv(theorem, rows, true);
}

std::string GridResult::to_csv_without_timing(TheoremId theorem) const {
  return render_csv(theorem, rows, false);
}

GridResult run_verify_grid(const GridSpec& spec) {
  std::vector<ParamSet> cells;
  for (long long n : expand(spec.n)) {
    for (long long k : expand(spec.k)) {
      for (long long t : expand(spec.t)) {
        for (long long s : expand(spec.s)) {
          for (long long l : expand(spec.l)) {
            for (long long m : expand(spec.m)) {
              ParamSet p;
              if (spec.n) p.n = n;
              if (spec.k) p.k = k;
              if (spec.t) p.t = t;
              if (spec.s) p.s = s;
              if (spec.l) p.l = l;
              if (spec.m) p.m = m;
              if (check_theorem_params(spec.theorem, p).empty()) {
                cells.push_back(p);
              }
            }
          }
        }
      }
    }
  }

  GridResult result;
  result.rows.assign(cells.size(), GridRow{});
  int threads = resolve_threads(spec.search.threads);
  // One worker per cell; the search itself runs its value phase serially
  // inside a parallel sweep.
  SearchOptions cell_opts = spec.search;
  if (threads > 1) cell_opts.threads = 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::size_t i = 0; i < cells.size(); ++i) {
    GridRow row;
    row.params = cells[i];
    row.bound = bound_for_theorem(spec.theorem, cells[i]).str();
    try {
      ConstraintSpec cs = ConstraintSpec::make(spec.theorem, cells[i]);
      SearchReport rep = max_constrained_sum(cs, cell_opts);
      row.search_max = std::to_string(rep.max_sum);
      row.match = (row.search_max == row.bound) ? "true" : "false";
      row.nodes = rep.nodes_explored;
      row.seconds = rep.seconds;
    } catch (const SizeGuardError&) {
      row.match = "skip";
    }
    result.rows[i] = std::move(row);
  }

  for (const GridRow& row : result.rows) {
    if (row.match == "false") result.all_match = false;
    if (row.match == "skip") ++result.skipped;
  }
  return result;
}

}  // namespace crossint
