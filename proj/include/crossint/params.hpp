#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crossint {

/// Families of hypotheses the search and replay machinery understands.
///   hm_pair    nonempty cross-intersecting pair, equal uniformity
///   ft_pair    nonempty cross-intersecting pair, uniformities k and l
///   frankl_i   F ((k+t)-uniform) t-intersecting, G k-uniform, cross
///   frankl_ii  as frankl_i but F (t+1)-intersecting and nonempty
///   conjecture frankl_ii plus the clique hypothesis on F
///   main2      trace-restricted universes over a prefix [m], F t-intersecting
///   main6      G intersecting with the clique hypothesis, uniformities k >= l
///   h          single intersecting k-uniform family containing all of C([m],k)
enum class TheoremId {
  hm_pair,
  ft_pair,
  frankl_i,
  frankl_ii,
  conjecture,
  main2,
  main6,
  h,
};

std::optional<TheoremId> theorem_from_string(std::string_view name);
std::string_view theorem_name(TheoremId id);

/// Scalar parameters of a theorem instance; fields unused by a given theorem
/// stay disengaged.
struct ParamSet {
  std::optional<long long> n, k, t, s, l, m;
};

/// Every violated precondition of the given theorem, one message per failing
/// inequality. Empty means the instance is valid.
std::vector<std::string> check_theorem_params(TheoremId id, const ParamSet& p);

/// Throws PreconditionError naming the failing inequalities.
void require_theorem_params(TheoremId id, const ParamSet& p);

}  // namespace crossint
