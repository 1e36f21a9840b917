#pragma once

#include <optional>
#include <vector>

#include "mixknap/cut.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"

namespace mixknap {

// Index conventions (see instance.hpp): T and S hold 0-based scenario
// indices; q-positions are 1-based counters j = 1..|S| as in the recursion.
// T subset of {0,..,m-1} corresponds to chains within the first m
// scenarios; S subset of {m+1,..,n-1} excludes scenario m itself.

/// One member of the explicit facet family: a chain T, an ordered tail
/// S = (q_1,..,q_sigma) with sigma = p - s(m), and an optional positive
/// scale d applied to (a, p) before all checks.
struct FdiSpec {
  int m = 0;
  std::vector<int> T;
  std::vector<int> S;  // ordered: position j holds q_j
  Rat scale = 1;
};

/// k(j) = max{k <= n : s(k) - s(m) <= j} for positions j = 1..p-s(m).
struct KIndexMap {
  std::vector<int> k_of;  // k_of[j-1] = k(j)

  int at(int position) const { return k_of[position - 1]; }
  int size() const { return static_cast<int>(k_of.size()); }
};

/// Throws NotIntegral when p - s(m) is not a nonnegative integer.
KIndexMap k_index_map(const Instance& instance, int m);

/// Strengthened star inequality for a chain T within {0,..,nu-1}:
/// y + sum((h(t_j) - h(t_{j+1})) z_{t_j}) >= h(t_1) with tail value h(nu).
/// The cut is facet-defining iff h(t_1) = h(0) (value comparison).
struct StarCut {
  MixingCut cut;
  bool facet_claim = false;
};

StarCut star_cut(const Instance& instance, const std::vector<int>& T);

struct FdiCut {
  MixingCut cut;
  bool facet_claim = false;
  /// Tail coefficients by position: alpha_on_q[j-1] = alpha_{q_j}.
  RatVector alpha_on_q;
};

/// Validates the FdiSpec (including the prefix-gap condition
/// s(k) - s(m) a positive integer for k in (m, nu], without which the
/// construction can produce invalid cuts) and evaluates the coefficient
/// recursion. Throws SpecViolation naming the failed condition.
FdiCut fdi_cut(const Instance& instance, const FdiSpec& spec);

/// The proof's explicit family of n+1 tight feasible points for a
/// facet-claimed spec. Requires facet_claim; throws SpecViolation
/// otherwise. Every returned point is feasible and on the cut hyperplane;
/// affine independence is certified by the caller via affine_rank.
std::vector<std::pair<Rat, std::vector<char>>> fdi_tight_points(
    const Instance& instance, const FdiSpec& spec);

/// (a, p) -> (d a, d p): the feasible set is unchanged, so cuts built on
/// the rescaled instance are valid for the original. Enlarges the
/// reachable spec family by changing prefix-sum integrality.
Instance rescale_knapsack(const Instance& instance, const Rat& d);

/// Scale candidates {1} and {1/a_j : a_j > 0, distinct}.
std::vector<Rat> candidate_scales(const Instance& instance);

struct FdiEnumerateOptions {
  int limit = 200;
  bool facets_only = false;
  bool try_scales = true;
};

/// All admissible specs (per scale, m, ordered S, then chains T), capped
/// at the limit. With facets_only, only h(t_1) = h(0) chains are kept.
std::vector<FdiSpec> enumerate_fdi_specs(const Instance& instance,
                                         const FdiEnumerateOptions& options);

}  // namespace mixknap
