#include "doctest.h"
#include "mixknap/error.hpp"
#include "mixknap/lp.hpp"

using namespace mixknap;

TEST_CASE("one-variable bound LP") {
  LpProblem lp = LpProblem::with_vars(1);
  lp.objective[0] = 1;
  lp.lower[0] = Rat(0);
  lp.add_row({Rat(1)}, Sense::GE, Rat(2));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.primal[0] == 2);
  CHECK(sol.objective_value == 2);
  CHECK(sol.dual_objective_value == 2);
}

TEST_CASE("unbounded LP reports an improving ray") {
  LpProblem lp = LpProblem::with_vars(1);
  lp.objective[0] = -1;
  lp.lower[0] = Rat(0);
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Unbounded);
  REQUIRE(sol.ray.size() == 1);
  CHECK(sol.ray[0] > 0);
}

TEST_CASE("two-variable vertex optimum with exact duals") {
  LpProblem lp = LpProblem::with_vars(2);
  lp.objective = {Rat(1), Rat(1)};
  lp.lower = {Rat(0), Rat(0)};
  lp.upper = {std::nullopt, std::nullopt};
  lp.add_row({Rat(1), Rat(2)}, Sense::GE, Rat(4));
  lp.add_row({Rat(3), Rat(1)}, Sense::GE, Rat(6));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.primal[0] == Rat(8, 5));
  CHECK(sol.primal[1] == Rat(6, 5));
  CHECK(sol.objective_value == Rat(14, 5));
  CHECK(sol.dual_objective_value == Rat(14, 5));
  CHECK(sol.dual[0] == Rat(2, 5));
  CHECK(sol.dual[1] == Rat(1, 5));
}

TEST_CASE("duality holds with boxes, equalities and free variables") {
  LpProblem lp = LpProblem::with_vars(3);
  lp.objective = {Rat(2), Rat(-1), Rat(1, 2)};
  lp.lower = {Rat(-1), std::nullopt, std::nullopt};
  lp.upper = {Rat(3), Rat(2), std::nullopt};
  lp.add_row({Rat(1), Rat(1), Rat(1)}, Sense::EQ, Rat(4));
  lp.add_row({Rat(1), Rat(-1), Rat(0)}, Sense::LE, Rat(1));
  lp.add_row({Rat(0), Rat(1), Rat(2)}, Sense::GE, Rat(1));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  // The solver verifies primal value == dual value internally; re-check.
  CHECK(sol.objective_value == sol.dual_objective_value);
  Rat lhs0 = sol.primal[0] + sol.primal[1] + sol.primal[2];
  CHECK(lhs0 == 4);
  CHECK(sol.primal[0] - sol.primal[1] <= 1);
  CHECK(sol.primal[1] + 2 * sol.primal[2] >= 1);
  CHECK(sol.dual[1] <= 0);  // LE row in a minimization
  CHECK(sol.dual[2] >= 0);  // GE row
}

TEST_CASE("infeasible LP yields signed Farkas multipliers") {
  LpProblem lp = LpProblem::with_vars(1);
  lp.objective[0] = 0;
  lp.lower[0] = Rat(0);
  lp.add_row({Rat(1)}, Sense::GE, Rat(2));
  lp.add_row({Rat(1)}, Sense::LE, Rat(1));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Infeasible);
  REQUIRE(sol.dual.size() == 2);
  CHECK(sol.dual[0] >= 0);
  CHECK(sol.dual[1] <= 0);
  // Aggregated as a >=-combination: w x >= r for feasible x, with
  // max over x >= 0 of w x falling short of r.
  Rat w = sol.dual[0] + sol.dual[1];
  Rat r = sol.dual[0] * 2 + sol.dual[1] * 1;
  CHECK(w <= 0);
  CHECK(r > 0);
}

TEST_CASE("degenerate LPs terminate under Bland's rule") {
  // Classic cycling-prone structure.
  LpProblem lp = LpProblem::with_vars(4);
  lp.objective = {Rat(-3, 4), Rat(150), Rat(-1, 50), Rat(6)};
  for (int j = 0; j < 4; ++j) lp.lower[j] = Rat(0);
  lp.add_row({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, Sense::LE, Rat(0));
  lp.add_row({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, Sense::LE, Rat(0));
  lp.add_row({Rat(0), Rat(0), Rat(1), Rat(0)}, Sense::LE, Rat(1));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == Rat(-1, 20));
}

TEST_CASE("re-solving an unmodified problem is bit-identical") {
  LpProblem lp = LpProblem::with_vars(2);
  lp.objective = {Rat(1), Rat(2)};
  lp.lower = {Rat(0), Rat(0)};
  lp.add_row({Rat(1), Rat(1)}, Sense::GE, Rat(3));
  LpSolution a = lp_solve(lp);
  LpSolution b = lp_solve(lp);
  CHECK(a.objective_value == b.objective_value);
  CHECK(a.primal == b.primal);
  CHECK(a.dual == b.dual);
}

TEST_CASE("incremental rows: redundant, binding, infeasible") {
  LpProblem lp = LpProblem::with_vars(1);
  lp.objective[0] = 1;
  lp.lower[0] = Rat(0);
  lp.add_row({Rat(1)}, Sense::GE, Rat(2));
  LpSolver solver(std::move(lp));
  CHECK(solver.solve().objective_value == 2);

  solver.add_row({{Rat(1)}, Sense::GE, Rat(1)});  // redundant
  CHECK(solver.solve().objective_value == 2);

  solver.add_row({{Rat(1)}, Sense::GE, Rat(5)});  // binding
  CHECK(solver.solve().objective_value == 5);

  solver.add_row({{Rat(1)}, Sense::LE, Rat(4)});  // now contradictory
  CHECK(solver.solve().status == LpStatus::Infeasible);
}

TEST_CASE("dimension mismatches are rejected") {
  LpProblem lp = LpProblem::with_vars(2);
  CHECK_THROWS_AS(lp.add_row({Rat(1)}, Sense::GE, Rat(0)), DimensionMismatch);
  CHECK_THROWS_AS(lp_add_row(lp, {{Rat(1)}, Sense::GE, Rat(0)}),
                  DimensionMismatch);
}

TEST_CASE("solve counters accumulate") {
  long before = lp_stats().solves.load();
  LpProblem lp = LpProblem::with_vars(1);
  lp.objective[0] = 1;
  lp.lower[0] = Rat(0);
  lp_solve(lp);
  CHECK(lp_stats().solves.load() == before + 1);
  CHECK(lp_stats().duality_failures.load() == 0);
}
