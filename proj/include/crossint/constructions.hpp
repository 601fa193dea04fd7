#pragma once

#include <cstdint>
#include <string_view>

#include "crossint/params.hpp"
#include "crossint/set_family.hpp"

namespace crossint {

/// All k-sets containing the fixed element x (a full star).
SetFamily make_star(int n, int k, int x);

/// C([m],k) embedded in universe n.
SetFamily make_clique(int n, int k, int m);

/// The first r k-subsets of [n] in lexicographic order.
SetFamily make_lex_segment(int n, int k, std::uint64_t r);

/// The extremal pair attaining the conjecture bound:
///   F0 = C([k+t+s], k+t)           ((k+t)-uniform)
///   G0 = {G in C([n],k): |G cap [k+t+s]| >= s+1}
SetFamily make_f0(int n, int k, int t, int s);
SetFamily make_g0(int n, int k, int t, int s);

/// {B in C([n],k): |B cap [m]| >= s+1}, the restricted-universe layer.
SetFamily make_restricted(int n, int k, int m, int s);

/// The tight pair for the main6 bound (verified, not assumed):
///   G = C([l+s], l), F = {A in C([n],k): |A cap [l+s]| >= s+1}.
SetFamily make_main6_G(int n, int k, int l, int s);
SetFamily make_main6_F(int n, int k, int l, int s);

/// The inclusion-maximal family cross-intersecting with every member of f:
/// {G in C([n],k_other): G meets every F in f}. For empty f this is the whole
/// layer.
SetFamily companion(const SetFamily& f, int k_other);

namespace serial {
SetFamily companion(const SetFamily& f, int k_other);
}

/// Dispatch by kind name for the CLI: star | clique | lex_segment | f0 | g0 |
/// restricted | main6_F | main6_G. x is the star centre, r the segment length.
SetFamily construct(std::string_view kind, const ParamSet& p,
                    std::optional<int> x = {},
                    std::optional<std::uint64_t> r = {});

}  // namespace crossint
