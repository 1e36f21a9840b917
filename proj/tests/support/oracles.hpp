#pragma once

// Independent brute-force oracles used to freeze expected values. These
// stay deliberately naive (full enumeration, direct textbook recursions)
// and never call the implementation paths they certify.

#include <optional>
#include <vector>

#include "mixknap/heuristic.hpp"
#include "mixknap/hull.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"
#include "mixknap/separation.hpp"

namespace mixknap::testing {

/// min sum(alpha_j z_j : j >= k) over all feasible tails by enumeration.
Rat brute_force_fk(const Instance& instance, int k, const RatVector& alpha);

/// min sum(Delta_i (1 - z_{S_i}) : S_i >= k) over all feasible tails.
Rat brute_force_gk(const Instance& instance, int k, const std::vector<int>& S,
                   const RatVector& delta_on_S);

/// Cardinality-case membership rows: for a = 1 instances, the direct
/// slacks sum(alpha_j : j < k) + min over subsets of {k,..,n-1} of size
/// <= p - k of their alpha sum + h(k) - beta, k in [0, p].
RatVector direct_cardinality_slacks(const Instance& instance,
                                    const RatVector& alpha, const Rat& beta);

/// The cardinality-case complemented-coefficient recursion:
/// Delta_1 = h(m) - h(m+1);
/// Delta_j = max(Delta_{j-1},
///               h(m) - h(m+j) - sum(Delta_i : ell_i >= m+j, i < j)).
RatVector tpl_delta_recursion(const Instance& instance, int m,
                              const std::vector<int>& ell);

/// Exact sign-pattern separation by row generation over the
/// g_k-described polyhedron (the ground truth the compact LP must match
/// when weights on S are uniform). Returns LP*.
Rat pattern_rowgen_optimum(const Instance& instance,
                           const SeparationQuery& query,
                           const SignPattern& pattern, const Rat& box);

/// Is (y, z) in conv(points) + cone{(1,0)}? Solved as an LP feasibility
/// problem over the convex multipliers.
bool hull_membership(const Instance& instance,
                     const std::vector<HullPoint>& points, const Rat& y,
                     const RatVector& z);

/// Exhaustive most-violated search over the structured family: all
/// admissible (m, r), all chains T, all tail sets G and all their
/// orderings. Returns the best violation (nullopt when the family is
/// empty). Only sensible for small instances.
std::optional<Rat> brute_force_structured_best(const Instance& instance,
                                               const SeparationQuery& query);

/// Seeded instance pool shared by tests and the acceptance suite:
/// n in [4, 12], integer weights in [0, 20] with max(a) <= p < sum(a),
/// h random nonincreasing in [0, 50] with h(0) > 0.
Instance pool_instance(std::uint64_t seed);

/// Random cut generator biased toward the validity boundary: about half
/// the draws take beta = h(0) + f_0(alpha) + jitter.
struct RandomCut {
  RatVector alpha;
  Rat beta;
};
RandomCut random_cut(const Instance& instance, std::uint64_t seed);

}  // namespace mixknap::testing
