#pragma once

#include <utility>
#include <vector>

#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"

namespace mixknap {

/// The k-th nested knapsack: binary z with sum(a_j z_j : j >= k) <= p - s(k).
/// Coordinates j < k are free (they do not enter the constraint).
struct KnapRestriction {
  const Instance* instance = nullptr;
  int k = 0;
  Rat capacity;

  static KnapRestriction at(const Instance& inst, int k);
};

/// Value and one minimizer of min{ sum(alpha_j z_j : j >= k) } over the
/// k-th nested knapsack. The returned argmin has z_j = 1 for all j < k
/// (such an optimum always exists) and selects beyond the prefix only
/// indices with alpha_j < 0.
struct FkResult {
  Rat value;
  std::vector<char> argmin;
};

FkResult minimize_fk(const KnapRestriction& restriction, const RatVector& alpha);

/// min{ sum(Delta_j (1 - z_j) : j in S, j >= k) } over the k-th nested
/// knapsack, for Delta >= 0 supported on S.
struct GkResult {
  Rat value;
  /// Indices of S covered by the minimizer (their Delta term vanishes).
  std::vector<int> covered;
};

GkResult minimize_gk(const KnapRestriction& restriction,
                     const std::vector<int>& S, const RatVector& delta_on_S);

/// Sum of the smallest (l - |{j in S : j < k}|) values among
/// {Delta_j : j in S, j >= k}. A nonpositive count gives 0; a count
/// exceeding the available elements is clamped and flagged.
struct DeltaBracket {
  Rat value;
  bool clamped = false;
};

DeltaBracket delta_bracket(const std::vector<int>& S, const RatVector& delta_on_S,
                           int k, const Rat& l);

/// Closed-form f_k under the uniform-tail partition hypotheses:
/// given m, an ordering q of S with alpha_{q_1} >= ... >= alpha_{q_|S|},
/// returns sum(alpha_j : j in S) for k <= m and the tail sum
/// sum(alpha_{q_i} : i > s(k) - s(m)) for k in (m, nu]. Checks all
/// hypotheses and throws HypothesisViolated when one fails.
Rat fk_closed_form(const KnapRestriction& restriction, int m,
                   const std::vector<int>& q_ordered_S, const RatVector& alpha);

/// Exact 0/1 knapsack kernel: maximize sum(value_j z_j) subject to
/// sum(weight_j z_j) <= cap over the given items. Items with value <= 0
/// are never taken; weight-0 items with positive value are always taken.
/// Uses capacity DP when weights scale to small integers, otherwise
/// depth-first branch and bound with a fractional bound.
struct KernelItem {
  int index;
  Rat value;
  Rat weight;
};

struct KernelResult {
  Rat value;
  std::vector<int> chosen;
};

KernelResult knapsack_max(std::vector<KernelItem> items, const Rat& cap);

}  // namespace mixknap
