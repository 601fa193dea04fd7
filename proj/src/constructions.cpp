#include "crossint/constructions.hpp"

#include <bit>
#include <string>

#include "crossint/parallel.hpp"
#include "crossint/subsets.hpp"

namespace crossint {

namespace {

void check_nk(const char* what, int n, int k) {
  if (n < 0 || n > kMaxUniverse || k < 0 || k > n) {
    throw PreconditionError(std::string(what) +
                            ": 0 <= k <= n <= 64 violated (n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

// {A in C([n],k): |A cap [m]| >= threshold}
SetFamily trace_layer(const char* what, int n, int k, int m, int threshold) {
  check_nk(what, n, k);
  if (m < 0 || m > n) {
    throw PreconditionError(std::string(what) + ": 0 <= m <= n violated (m=" +
                            std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  std::uint64_t pm = prefix_mask(m);
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k, [&](std::uint64_t a) {
    if (std::popcount(a & pm) >= threshold) out.push_back(a);
  });
  return SetFamily::make(n, k, std::move(out));
}

long long need(const std::optional<long long>& v, const char* name) {
  if (!v) {
    throw PreconditionError(std::string("construct: missing parameter ") + name);
  }
  return *v;
}

ParamSet conjecture_params(int n, int k, int t, int s) {
  ParamSet p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.s = s;
  return p;
}

ParamSet main6_params(int n, int k, int l, int s) {
  ParamSet p;
  p.n = n;
  p.k = k;
  p.l = l;
  p.s = s;
  return p;
}

}  // namespace

SetFamily make_star(int n, int k, int x) {
  check_nk("make_star", n, k);
  if (x < 1 || x > n) {
    throw PreconditionError("make_star: 1 <= x <= n violated (x=" +
                            std::to_string(x) + ", n=" + std::to_string(n) + ")");
  }
  if (k < 1) {
    throw PreconditionError("make_star: k >= 1 violated (k=" + std::to_string(k) +
                            ")");
  }
  std::uint64_t bx = element_bit(x);
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k, [&](std::uint64_t a) {
    if (a & bx) out.push_back(a);
  });
  return SetFamily::make(n, k, std::move(out));
}

SetFamily make_clique(int n, int k, int m) {
  check_nk("make_clique", n, k);
  if (m < k || m > n) {
    throw PreconditionError("make_clique: k <= m <= n violated (m=" +
                            std::to_string(m) + ", k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
  std::vector<std::uint64_t> out;
  for_each_k_subset(m, k, [&](std::uint64_t a) { out.push_back(a); });
  return SetFamily::make(n, k, std::move(out));
}

SetFamily make_lex_segment(int n, int k, std::uint64_t r) {
  check_nk("make_lex_segment", n, k);
  std::uint64_t total = layer_size(n, k);
  if (r > total) {
    throw PreconditionError("make_lex_segment: r <= C(n,k) violated (r=" +
                            std::to_string(r) + ", C(n,k)=" +
                            std::to_string(total) + ")");
  }
  std::vector<std::uint64_t> out;
  out.reserve(r);
  for_each_k_subset(n, k, [&](std::uint64_t a) {
    if (out.size() < r) out.push_back(a);
  });
  return SetFamily::make(n, k, std::move(out));
}

SetFamily make_f0(int n, int k, int t, int s) {
  require_theorem_params(TheoremId::conjecture, conjecture_params(n, k, t, s));
  return make_clique(n, k + t, k + t + s);
}

SetFamily make_g0(int n, int k, int t, int s) {
  require_theorem_params(TheoremId::conjecture, conjecture_params(n, k, t, s));
  return trace_layer("make_g0", n, k, k + t + s, s + 1);
}

SetFamily make_restricted(int n, int k, int m, int s) {
  if (s < 0) {
    throw PreconditionError("make_restricted: s >= 0 violated (s=" +
                            std::to_string(s) + ")");
  }
  if (m < 1) {
    throw PreconditionError("make_restricted: m >= 1 violated (m=" +
                            std::to_string(m) + ")");
  }
  return trace_layer("make_restricted", n, k, m, s + 1);
}

SetFamily make_main6_G(int n, int k, int l, int s) {
  require_theorem_params(TheoremId::main6, main6_params(n, k, l, s));
  return make_clique(n, l, l + s);
}

SetFamily make_main6_F(int n, int k, int l, int s) {
  require_theorem_params(TheoremId::main6, main6_params(n, k, l, s));
  return trace_layer("make_main6_F", n, k, l + s, s + 1);
}

namespace serial {

SetFamily companion(const SetFamily& f, int k_other) {
  int n = f.universe();
  check_nk("companion", n, k_other);
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k_other, [&](std::uint64_t g) {
    for (std::uint64_t a : f.masks()) {
      if ((a & g) == 0) return;
    }
    out.push_back(g);
  });
  return SetFamily::make(n, k_other, std::move(out));
}

}  // namespace serial

SetFamily companion(const SetFamily& f, int k_other) {
  int n = f.universe();
  check_nk("companion", n, k_other);
  std::uint64_t total = layer_size(n, k_other);
  if (total < (1u << 12) || f.is_empty()) {
    return serial::companion(f, k_other);
  }
  std::vector<std::uint64_t> layer = all_k_subsets(n, k_other);
  std::vector<char> keep(layer.size(), 0);
  const auto& fm = f.masks();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < layer.size(); ++i) {
    std::uint64_t g = layer[i];
    char ok = 1;
    for (std::uint64_t a : fm) {
      if ((a & g) == 0) {
        ok = 0;
        break;
      }
    }
    keep[i] = ok;
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < layer.size(); ++i) {
    if (keep[i]) out.push_back(layer[i]);
  }
  return SetFamily::make(n, k_other, std::move(out));
}

SetFamily construct(std::string_view kind, const ParamSet& p,
                    std::optional<int> x, std::optional<std::uint64_t> r) {
  int n = static_cast<int>(need(p.n, "n"));
  int k = static_cast<int>(need(p.k, "k"));
  if (kind == "star") {
    if (!x) throw PreconditionError("construct star: missing parameter x");
    return make_star(n, k, *x);
  }
  if (kind == "clique") {
    return make_clique(n, k, static_cast<int>(need(p.m, "m")));
  }
  if (kind == "lex_segment") {
    if (!r) throw PreconditionError("construct lex_segment: missing parameter r");
    return make_lex_segment(n, k, *r);
  }
  if (kind == "f0") {
    return make_f0(n, k, static_cast<int>(need(p.t, "t")),
                   static_cast<int>(need(p.s, "s")));
  }
  if (kind == "g0") {
    return make_g0(n, k, static_cast<int>(need(p.t, "t")),
                   static_cast<int>(need(p.s, "s")));
  }
  if (kind == "restricted") {
    return make_restricted(n, k, static_cast<int>(need(p.m, "m")),
                           static_cast<int>(need(p.s, "s")));
  }
  if (kind == "main6_G") {
    return make_main6_G(n, k, static_cast<int>(need(p.l, "l")),
                        static_cast<int>(need(p.s, "s")));
  }
  if (kind == "main6_F") {
    return make_main6_F(n, k, static_cast<int>(need(p.l, "l")),
                        static_cast<int>(need(p.s, "s")));
  }
  throw PreconditionError("construct: unknown kind '" + std::string(kind) + "'");
}

}  // namespace crossint
