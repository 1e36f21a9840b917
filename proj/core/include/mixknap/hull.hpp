#pragma once

#include <cstdint>
#include <vector>

#include "mixknap/cut.hpp"
#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"

namespace mixknap {

/// One feasible point (y(z), z) with z encoded as a bitmask and y(z) the
/// minimal feasible value max{h_j : z_j = 0}. The full feasible region is
/// conv(points) + cone{(1, 0)}.
struct HullPoint {
  std::uint32_t mask = 0;
  Rat y;

  std::vector<char> z(int n) const;
};

constexpr int kDefaultHullCap = 14;

/// All knapsack-feasible z paired with their minimal y. Throws
/// InstanceTooLarge beyond the cap.
std::vector<HullPoint> enumerate_hull_points(const Instance& instance,
                                             int cap = kDefaultHullCap);

struct ValidityReport {
  bool valid = false;
  /// Point minimizing y + alpha^T z - beta.
  HullPoint worst;
  Rat worst_slack;
};

/// Ground-truth validity: the cut holds at every enumerated point (the
/// recession direction (1,0) is safe because the y-coefficient is 1).
ValidityReport certify_valid(const Instance& instance, const MixingCut& cut,
                             const std::vector<HullPoint>& points);
ValidityReport certify_valid(const Instance& instance, const MixingCut& cut,
                             int cap = kDefaultHullCap);

struct FacetReport {
  bool is_facet = false;
  int rank = 0;  // affine rank of the tight points; facet iff rank = n + 1
  std::vector<HullPoint> tight_points;
};

/// Collects tight points of a valid cut and computes their exact affine
/// rank by fraction-free elimination on the homogenized coordinates.
FacetReport certify_facet(const Instance& instance, const MixingCut& cut,
                          const std::vector<HullPoint>& points);
FacetReport certify_facet(const Instance& instance, const MixingCut& cut,
                          int cap = kDefaultHullCap);

/// Affine rank of a point set (y, z) via exact elimination on rows
/// [1, y, z_0, .., z_{n-1}].
int affine_rank(const std::vector<std::pair<Rat, std::vector<char>>>& points);

/// A point of the feasible hull with provenance for separation queries.
struct InsidePoint {
  Rat y;
  RatVector z;
};

/// Deterministic convex combinations of hull points plus a nonnegative
/// multiple of the recession direction (1, 0): every returned point lies
/// in the convex hull.
std::vector<InsidePoint> sample_inside(const Instance& instance,
                                       std::uint64_t seed, int count,
                                       int cap = kDefaultHullCap);

}  // namespace mixknap
