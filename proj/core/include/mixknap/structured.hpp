#pragma once

#include <vector>

#include "mixknap/fdi.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/separation.hpp"

namespace mixknap {

/// Best chain T within {0,..,m-1} for a fractional point: shortest path on
/// the DAG with nodes {0,..,m} (m = sink), arcs i -> j of weight
/// (h(i) - h(j)) z*_i, starting from a scenario of top value h(0). Cost is
/// the chain's contribution sum((h(t_j) - h(t_{j+1})) z*_{t_j}) with tail
/// value h(m).
struct BestChain {
  std::vector<int> T;
  Rat cost;
};

BestChain best_T_shortest_path(const Instance& instance, int m,
                               const RatVector& z_star);

/// Most violated family member with S = F u G for fixed (m, r):
/// F holds the forced positions q_j = k(j) for j <= r; G takes the
/// remaining positions from the tail pool {k(sigma),..,n-1}, choosing the
/// largest z* values. Throws ConfigViolation naming any failed hypothesis.
SeparationResult separate_structured(const Instance& instance,
                                     const SeparationQuery& query, int m, int r);

struct StructuredPairOutcome {
  int m = 0;
  int r = 0;
  Rat violation;
};

struct StructuredAllResult {
  SeparationResult result;
  /// Diagnostics: best violation for every admissible (m, r) pair.
  std::vector<StructuredPairOutcome> per_pair;
};

/// Sweeps all admissible (m, r) pairs (inadmissible pairs are skipped) and
/// returns the overall most violated cut; ties resolve to the smallest
/// (m, r). jobs > 1 distributes pairs across threads; the reduction is
/// deterministic regardless of the job count.
StructuredAllResult separate_structured_all(const Instance& instance,
                                            const SeparationQuery& query,
                                            int jobs = 1);

}  // namespace mixknap
