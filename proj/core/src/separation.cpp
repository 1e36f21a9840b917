#include "mixknap/separation.hpp"

#include <set>
#include <utility>

#include "mixknap/error.hpp"
#include "mixknap/knapsack.hpp"
#include "mixknap/lp.hpp"

namespace mixknap {

void SeparationQuery::validate() const {
  if (y_star < 0) throw Error("query needs y* >= 0");
  for (const Rat& zj : z_star) {
    if (zj < 0 || zj > 1) throw Error("query needs z* in [0,1]^n");
  }
}

std::string to_string(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::Inside: return "inside";
    case SeparationVerdict::CutFound: return "cut-found";
    case SeparationVerdict::LpUnboundedNormalized:
      return "lp-unbounded-normalized";
    case SeparationVerdict::InsideForFamily: return "inside-for-family";
    case SeparationVerdict::FamilyEmpty: return "family-empty";
  }
  return "inside";
}

Rat default_box(const Instance& instance) {
  return 2 * (instance.h(0) - instance.h_tail()) + 1;
}

namespace {

struct MasterOutcome {
  RatVector alpha;
  Rat beta;
  Rat lp_value;
  bool boundary_active = false;
  int generated_rows = 0;
};

// Solves min alpha^T z* - beta over the boxed coefficient polyhedron by
// delayed row generation. Variables: alpha_0..alpha_{n-1}, beta.
MasterOutcome solve_master(const Instance& instance, const RatVector& z_star,
                           const Rat& box) {
  const int n = instance.n();
  const Rat beta_bound = Rat(n + 1) * box + instance.h(0);

  LpProblem master = LpProblem::with_vars(n + 1);
  for (int j = 0; j < n; ++j) {
    master.objective[j] = z_star[j];
    master.lower[j] = -box;
    master.upper[j] = box;
  }
  master.objective[n] = -1;
  master.lower[n] = -beta_bound;
  master.upper[n] = beta_bound;

  // Seed rows: the prefix-only witnesses keep beta bounded from the start.
  for (int k = 0; k <= instance.nu(); ++k) {
    RatVector row(n + 1, Rat(0));
    for (int j = 0; j < k; ++j) row[j] = 1;
    row[n] = -1;
    master.add_row(std::move(row), Sense::GE, -instance.h(k));
  }

  LpSolver solver(std::move(master));
  std::set<std::pair<int, std::vector<char>>> added;
  MasterOutcome outcome;
  while (true) {
    const LpSolution& solution = solver.solve();
    if (solution.status != LpStatus::Optimal)
      throw Error("separation master LP must stay boxed-feasible");
    RatVector alpha(solution.primal.begin(), solution.primal.begin() + n);
    const Rat& beta = solution.primal[n];

    bool violated = false;
    Rat prefix = 0;
    for (int k = 0; k <= instance.nu(); ++k) {
      if (k > 0) prefix += alpha[k - 1];
      FkResult fk = minimize_fk(KnapRestriction::at(instance, k), alpha);
      if (prefix + fk.value + instance.h(k) - beta < 0) {
        std::vector<char> tail(fk.argmin.begin(), fk.argmin.end());
        for (int j = 0; j < k; ++j) tail[j] = 1;
        if (added.insert({k, tail}).second) {
          RatVector row(n + 1, Rat(0));
          for (int j = 0; j < k; ++j) row[j] = 1;
          for (int j = k; j < n; ++j) row[j] = tail[j] ? 1 : 0;
          row[n] = -1;
          solver.add_row({std::move(row), Sense::GE, -instance.h(k)});
          ++outcome.generated_rows;
          violated = true;
        }
      }
    }
    if (!violated) {
      outcome.alpha = std::move(alpha);
      outcome.beta = beta;
      outcome.lp_value = solution.objective_value;
      for (int j = 0; j < n; ++j) {
        if (outcome.alpha[j] == box || outcome.alpha[j] == -box)
          outcome.boundary_active = true;
      }
      if (outcome.beta == beta_bound || outcome.beta == -beta_bound)
        outcome.boundary_active = true;
      return outcome;
    }
  }
}

}  // namespace

SeparationResult separate_exact(const Instance& instance,
                                const SeparationQuery& query, const Rat& box) {
  query.validate();
  if (static_cast<int>(query.z_star.size()) != instance.n())
    throw DimensionMismatch("z* length must equal n");
  if (box <= 0) throw Error("box must be positive");

  SeparationResult result;
  Rat current_box = box;
  MasterOutcome outcome = solve_master(instance, query.z_star, current_box);
  result.generated_rows = outcome.generated_rows;

  // A boundary-active nonnegative optimum may be a box artifact: enlarge
  // and re-solve before giving up on an Inside verdict.
  int enlargements = 0;
  while (outcome.boundary_active && query.y_star + outcome.lp_value >= 0 &&
         enlargements < 2) {
    current_box = 2 * current_box + 1;
    MasterOutcome wider = solve_master(instance, query.z_star, current_box);
    result.generated_rows += wider.generated_rows;
    outcome = std::move(wider);
    ++enlargements;
  }

  result.lp_value = outcome.lp_value;
  if (query.y_star + outcome.lp_value < 0) {
    result.verdict = SeparationVerdict::CutFound;
    MixingCut cut;
    cut.alpha = std::move(outcome.alpha);
    cut.beta = std::move(outcome.beta);
    cut.provenance = CutProvenance::SeparationLp;
    result.violation = -(query.y_star + result.lp_value);
    result.cut = std::move(cut);
  } else if (outcome.boundary_active) {
    result.verdict = SeparationVerdict::LpUnboundedNormalized;
    result.violation = 0;
  } else {
    result.verdict = SeparationVerdict::Inside;
    result.violation = 0;
  }
  return result;
}

SeparationResult separate_exact(const Instance& instance,
                                const SeparationQuery& query) {
  return separate_exact(instance, query, default_box(instance));
}

}  // namespace mixknap
