#pragma once

#include <vector>

#include "mixknap/rational.hpp"

namespace mixknap {

// Index conventions used across the library:
//   * Scenario indices are 0-based: j in [0, n).
//   * A "prefix of length k" means scenarios {0, .., k-1}; prefix sums
//     s(0) = 0, s(k) = a(0) + .. + a(k-1).
//   * nu = max{k : s(k) <= p}; always 0 <= nu < n.
//   * The value bounding y when the first k scenarios are covered is h(k)
//     (0-based), i.e. the (k+1)-th largest scenario value.

/// Immutable canonical instance: scenario values h sorted nonincreasing,
/// nonnegative weights a, capacity p. Safe to share across threads.
class Instance {
 public:
  /// Sorts scenarios by h nonincreasing (stable; ties keep input order),
  /// validates the model preconditions and computes derived data.
  /// With drop_zero_weights, scenarios with a_j = 0 are removed first.
  /// Throws RejectsInstance on invalid data.
  static Instance canonicalize(RatVector h_raw, RatVector a_raw, Rat p,
                               bool drop_zero_weights = false);

  int n() const { return static_cast<int>(h_.size()); }
  const Rat& h(int j) const { return h_[j]; }
  const Rat& a(int j) const { return a_[j]; }
  const Rat& p() const { return p_; }
  int nu() const { return nu_; }

  /// Prefix weight sum, k in [0, n].
  const Rat& s(int k) const { return s_[k]; }

  /// h(nu): the unconditional lower bound on y over the feasible set.
  const Rat& h_tail() const { return h_[nu_]; }

  /// Residual capacity p - s(k) of the k-th nested knapsack.
  Rat capacity_at(int k) const { return p_ - s_[k]; }

  /// Position of canonical scenario j in the caller's original input.
  int original_index(int j) const { return orig_[j]; }

  const RatVector& h_vec() const { return h_; }
  const RatVector& a_vec() const { return a_; }

  /// Same instance with (a, p) replaced by (d*a, d*p), d > 0. The feasible
  /// set is unchanged; nu is unchanged; prefix-sum integrality may change.
  Instance rescaled(const Rat& d) const;

  /// True iff z (length n, 0/1) satisfies the knapsack constraint.
  bool feasible(const std::vector<char>& z) const;

  /// Minimal feasible y for a given z: max{h(j) : z_j = 0}. The set is
  /// nonempty because sum(a) > p forces a zero coordinate.
  Rat min_y(const std::vector<char>& z) const;

 private:
  Instance() = default;
  void compute_derived();

  RatVector h_, a_, s_;
  Rat p_;
  int nu_ = 0;
  std::vector<int> orig_;
};

/// One row of a chance-constrained source: realizations xi with
/// probabilities pi and risk level epsilon.
struct ScenarioSource {
  RatVector xi;
  RatVector pi;
  Rat epsilon;

  /// Throws RejectsInstance unless pi > 0, sum(pi) = 1, 0 < epsilon < 1,
  /// xi >= 0 and sizes match.
  void validate() const;
};

/// Drops scenarios with pi_j > epsilon (their indicator is forced to 0),
/// then canonicalizes with a := pi, p := epsilon, h := xi.
Instance from_chance_constraint(const ScenarioSource& src);

}  // namespace mixknap
