#pragma once

#include <vector>

#include "mixknap/instance.hpp"
#include "mixknap/separation.hpp"

namespace mixknap {

/// Partition of the scenarios by coefficient sign: delta >= 0 on R,
/// complemented terms Delta >= 0 on S. Requires min{a_j : j in S} > 0
/// when S is nonempty.
struct SignPattern {
  std::vector<int> R;
  std::vector<int> S;

  /// min{a_j : j in S}; throws PatternViolation when S is nonempty and the
  /// minimum is not positive, or when R u S is not a partition.
  Rat validate(const Instance& instance) const;
};

/// Exact membership in the sign-restricted coefficient polyhedron:
/// sum(delta_j : j in R, j < k) + g_k(Delta) + h(k) >= h for k in [0, nu],
/// evaluated with the exact knapsack oracle.
struct GrMembershipReport {
  bool member = false;
  RatVector slacks;
};

GrMembershipReport gR_membership(const Instance& instance,
                                 const SignPattern& pattern,
                                 const RatVector& delta_on_R,
                                 const RatVector& Delta_on_S, const Rat& h);

/// Compact LP over the lifted polyhedron (order-statistic duals gamma^k,
/// rho^k): polynomially many rows, every feasible point projects into the
/// sign-restricted coefficient polyhedron, so every emitted cut is valid.
/// Exact over the pattern family when the weights on S are uniform.
SeparationResult separate_heuristic(const Instance& instance,
                                    const SeparationQuery& query,
                                    const SignPattern& pattern, const Rat& box);

SeparationResult separate_heuristic(const Instance& instance,
                                    const SeparationQuery& query,
                                    const SignPattern& pattern);

/// Candidate partitions for a query: the z* <= 1/2 threshold rule, the
/// uniform-weight tails {j > m : a_j = min}, and seeded balanced splits.
/// Patterns with a nonpositive tail minimum are filtered out.
std::vector<SignPattern> suggest_patterns(const Instance& instance,
                                          const SeparationQuery& query,
                                          int limit);

/// Runs every suggested pattern and keeps the most violated cut; jobs > 1
/// distributes patterns across threads with a deterministic reduction.
SeparationResult separate_heuristic_auto(const Instance& instance,
                                         const SeparationQuery& query,
                                         const Rat& box, int limit,
                                         int jobs = 1);

}  // namespace mixknap
