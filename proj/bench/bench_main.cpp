// Benchmarks the OpenMP kernels against their single-threaded references and
// verifies on the way that both produce identical results.
//
// Usage: crossint_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "crossint/bounds.hpp"
#include "crossint/constructions.hpp"
#include "crossint/parallel.hpp"
#include "crossint/properties.hpp"
#include "crossint/search.hpp"
#include "crossint/subsets.hpp"

using namespace crossint;

namespace {

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    best = std::min(best, elapsed);
  }
  return best;
}

void report(const char* kernel, double serial_s, double parallel_s, bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", kernel,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (repeats < 1) repeats = 1;
  std::printf("workers available: %d, best of %d runs\n\n", resolve_threads(0),
              repeats);
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    // all-pairs intersection level on a dense (k+t)-layer family
    SetFamily f0 = make_f0(18, 6, 6, 5);  // C([17],12): 6188 members
    bool rs = false, rp = false;
    double serial_s =
        time_best_of(repeats, [&] { rs = serial::is_t_intersecting(f0, 7); });
    double parallel_s =
        time_best_of(repeats, [&] { rp = is_t_intersecting(f0, 7); });
    report("pairwise intersection level", serial_s, parallel_s, rs == rp);
  }

  {
    // maximal partner family over a large layer
    SetFamily core = make_clique(24, 4, 8);
    SetFamily cs, cp;
    double serial_s =
        time_best_of(repeats, [&] { cs = serial::companion(core, 4); });
    double parallel_s = time_best_of(repeats, [&] { cp = companion(core, 4); });
    report("companion over C([24],4)", serial_s, parallel_s, cs == cp);
  }

  {
    // branch-and-bound value phase on a wide conjecture instance
    ParamSet p;
    p.n = 8;
    p.k = 3;
    p.t = 0;
    p.s = 1;
    ConstraintSpec spec = ConstraintSpec::make(TheoremId::conjecture, p);
    SearchOptions wide;
    wide.max_candidates = 30;
    SearchReport out_s, out_p;
    double serial_s = time_best_of(
        repeats, [&] { out_s = serial::max_constrained_sum(spec, wide); });
    double parallel_s =
        time_best_of(repeats, [&] { out_p = max_constrained_sum(spec, wide); });
    report("search value phase (24 cands)", serial_s, parallel_s,
           out_s.max_sum == out_p.max_sum &&
               out_s.witness_F == out_p.witness_F &&
               out_s.nodes_explored == out_p.nodes_explored);
  }

  {
    // exhaustive oracle scan, 2^20 subsets
    ParamSet p;
    p.n = 6;
    p.k = 3;
    ConstraintSpec spec = ConstraintSpec::unconstrained_pair(6, 3, 3, true);
    SearchOptions oracle_serial, oracle_parallel;
    oracle_serial.oracle = true;
    oracle_serial.threads = 1;
    oracle_parallel.oracle = true;
    SearchReport out_s, out_p;
    double serial_s = time_best_of(
        repeats, [&] { out_s = max_constrained_sum(spec, oracle_serial); });
    double parallel_s = time_best_of(
        repeats, [&] { out_p = max_constrained_sum(spec, oracle_parallel); });
    report("oracle scan (2^20 subsets)", serial_s, parallel_s,
           out_s.max_sum == out_p.max_sum &&
               out_s.witness_F == out_p.witness_F);
  }

  return 0;
}
