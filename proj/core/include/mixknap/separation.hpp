#pragma once

#include <optional>
#include <string>

#include "mixknap/cut.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"

namespace mixknap {

/// A fractional point to separate. The "inside" conclusion refers to the
/// full convex hull only when assume_z_in_convP holds (the separation
/// theorem's hypothesis); otherwise it certifies no cut of the mixing form
/// is violated.
struct SeparationQuery {
  Rat y_star;
  RatVector z_star;
  bool assume_z_in_convP = true;

  void validate() const;  // y >= 0, z in [0,1]^n
};

enum class SeparationVerdict {
  Inside,
  CutFound,
  /// The master optimum pressed against the coefficient box with
  /// nonnegative value; a wider box might still find a violated cut, so
  /// "inside" cannot be certified.
  LpUnboundedNormalized,
  /// Structured family only: no violated member, point not necessarily
  /// inside the hull.
  InsideForFamily,
  /// Structured family only: no admissible (m, r) pair on this instance.
  FamilyEmpty,
};

std::string to_string(SeparationVerdict v);

struct SeparationResult {
  SeparationVerdict verdict = SeparationVerdict::Inside;
  Rat lp_value;  // LP*: min alpha^T z* - beta over the family
  std::optional<MixingCut> cut;
  /// Violation of the returned cut at the query: beta - alpha^T z* - y*.
  Rat violation;
  int generated_rows = 0;
};

/// Default coefficient box half-width 2 (h(0) - h(nu)) + 1.
Rat default_box(const Instance& instance);

/// Exact separation by row generation over the coefficient polyhedron:
/// master LP in (alpha, beta) with |alpha_j| <= M, seeded with the nu+1
/// prefix rows; violated rows come from the knapsack minimizers. When the
/// boxed optimum is boundary-active and nonnegative, the box is enlarged
/// (up to two doublings) to distinguish Inside from a box artifact.
SeparationResult separate_exact(const Instance& instance,
                                const SeparationQuery& query, const Rat& box);

SeparationResult separate_exact(const Instance& instance,
                                const SeparationQuery& query);

}  // namespace mixknap
