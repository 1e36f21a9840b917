#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "mixknap/rational.hpp"

namespace mixknap {

enum class Sense { LE, GE, EQ };

struct LpRow {
  RatVector coef;
  Sense sense = Sense::GE;
  Rat rhs;
};

/// Dense LP in inequality form with box bounds: minimize c^T x subject to
/// the rows and lower <= x <= upper (absent bound = infinite).
struct LpProblem {
  RatVector objective;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }

  static LpProblem with_vars(int n) {
    LpProblem p;
    p.objective.assign(n, Rat(0));
    p.lower.assign(n, std::nullopt);
    p.upper.assign(n, std::nullopt);
    return p;
  }

  void add_row(RatVector coef, Sense sense, Rat rhs);

  /// Throws DimensionMismatch / Error unless sizes agree and lower <= upper.
  void validate() const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  RatVector primal;
  /// One multiplier per problem row. For Optimal: duals with the convention
  /// min c^T x = max b^T y + l^T lambda - u^T mu, y_i >= 0 on GE rows,
  /// y_i <= 0 on LE rows. For Infeasible: Farkas row multipliers.
  RatVector dual;
  Rat objective_value;
  /// Equals objective_value on every optimal solve (verified exactly).
  Rat dual_objective_value;
  /// Improving feasible direction when Unbounded.
  RatVector ray;
};

/// Exact two-phase primal simplex over rationals with Bland's rule.
/// On every optimal solve, strong duality (primal value = dual value,
/// computed independently from multipliers and bound duals) is verified
/// exactly; a mismatch throws Error and is counted in lp_stats().
LpSolution lp_solve(const LpProblem& problem);

/// Appends a constraint, returning the extended problem.
LpProblem lp_add_row(LpProblem problem, LpRow row);

/// Incremental wrapper: re-uses the previous optimum when an appended row
/// does not cut it off (appending rows can only shrink the feasible set).
class LpSolver {
 public:
  explicit LpSolver(LpProblem problem) : problem_(std::move(problem)) {}

  const LpProblem& problem() const { return problem_; }
  const LpSolution& solve();
  void add_row(LpRow row);

 private:
  LpProblem problem_;
  std::optional<LpSolution> cached_;
};

struct LpStats {
  std::atomic<long> solves{0};
  std::atomic<long> optimal{0};
  std::atomic<long> duality_verified{0};
  std::atomic<long> duality_failures{0};
};

/// Process-wide solve counters (used by the acceptance suite).
LpStats& lp_stats();

}  // namespace mixknap
