#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixknap/instance.hpp"
#include "mixknap/rational.hpp"

namespace mixknap {

enum class CutProvenance { Star, Tpl, Fdi, SeparationLp, Heuristic, Manual };

std::string to_string(CutProvenance p);
CutProvenance provenance_from_string(const std::string& s);

/// A mixing cut y + sum(alpha_j z_j) >= beta with the y-coefficient
/// normalized to 1.
struct MixingCut {
  RatVector alpha;
  Rat beta;
  CutProvenance provenance = CutProvenance::Manual;

  /// Ingests a cut gamma*y + alpha^T z >= beta, dividing through by gamma.
  /// Cuts with gamma <= 0 are rejected: gamma < 0 is never valid, and
  /// gamma = 0 cuts belong to the knapsack polytope, which is out of scope.
  static MixingCut normalized(const Rat& gamma, RatVector alpha, Rat beta,
                              CutProvenance provenance);

  /// y + alpha^T z evaluated at a point.
  Rat lhs(const Rat& y, const std::vector<char>& z) const;
};

/// Per-k slacks of the coefficient-polyhedron constraints
/// sum(alpha_j : j < k) + f_k(alpha) + h(k) - beta, k in [0, nu].
struct GMembershipReport {
  bool member = false;
  RatVector slacks;
  /// Set when violated: the smallest k attaining the minimum slack and the
  /// oracle argmin attaining it (a machine-checkable violation witness).
  std::optional<int> witness_k;
  std::optional<std::vector<char>> witness_z;
};

GMembershipReport g_membership(const Instance& instance, const MixingCut& cut);

/// The two computable necessary conditions for a facet-defining cut:
/// beta = h(0) + f_0(alpha), and alpha_k < 0 implies a_k > 0. Requires the
/// cut to be a coefficient-polyhedron member (throws NotGMember otherwise).
struct FacetSanityReport {
  bool rhs_matches_f0 = false;   // beta = h(0) + f_0(alpha)
  bool negatives_weighted = false;  // alpha_k < 0 => a_k > 0
  Rat f0;

  bool all_pass() const { return rhs_matches_f0 && negatives_weighted; }
};

FacetSanityReport facet_sanity(const Instance& instance, const MixingCut& cut);

}  // namespace mixknap
