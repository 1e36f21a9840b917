#include "mixknap/lp.hpp"

#include <algorithm>

#include "mixknap/error.hpp"

namespace mixknap {

void LpProblem::add_row(RatVector coef, Sense sense, Rat rhs) {
  if (static_cast<int>(coef.size()) != num_vars())
    throw DimensionMismatch("row length must equal the variable count");
  rows.push_back({std::move(coef), sense, std::move(rhs)});
}

void LpProblem::validate() const {
  const int n = num_vars();
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw DimensionMismatch("bound vectors must match the variable count");
  for (const auto& row : rows) {
    if (static_cast<int>(row.coef.size()) != n)
      throw DimensionMismatch("row length must equal the variable count");
  }
  for (int j = 0; j < n; ++j) {
    if (lower[j] && upper[j] && *lower[j] > *upper[j])
      throw Error("lower bound exceeds upper bound");
  }
}

LpStats& lp_stats() {
  static LpStats stats;
  return stats;
}

namespace {

// Standard-form translation of one original variable: x = offset + sign * x'
// for each attached column (free variables split into two columns).
struct Column {
  int var;    // original variable
  int sign;   // +1 or -1
};

class SimplexTableau {
 public:
  explicit SimplexTableau(const LpProblem& problem) : problem_(problem) {
    build();
  }

  LpSolution run() {
    LpSolution solution;
    // Phase I: minimize the sum of artificials.
    RatVector phase1_cost(total_cols_, Rat(0));
    for (int c = art_begin_; c < total_cols_; ++c) phase1_cost[c] = 1;
    Rat phase1_value = iterate(phase1_cost, /*allow_artificials=*/true);
    if (phase1_value > 0) {
      solution.status = LpStatus::Infeasible;
      solution.dual = map_duals(phase1_cost);
      lp_stats().solves.fetch_add(1);
      return solution;
    }
    drive_out_artificials();

    RatVector phase2_cost(total_cols_, Rat(0));
    for (int c = 0; c < art_begin_; ++c)
      phase2_cost[c] = problem_.objective[columns_[c].var] * columns_[c].sign;
    // Bound-row slacks and structural slacks cost 0; artificials blocked.
    iterate(phase2_cost, /*allow_artificials=*/false);
    lp_stats().solves.fetch_add(1);
    if (unbounded_col_ >= 0) {
      solution.status = LpStatus::Unbounded;
      solution.ray = map_ray();
      return solution;
    }
    solution.status = LpStatus::Optimal;
    solution.primal = map_primal();
    solution.dual = map_duals(phase2_cost);
    solution.objective_value = 0;
    for (int j = 0; j < problem_.num_vars(); ++j)
      solution.objective_value += problem_.objective[j] * solution.primal[j];
    solution.dual_objective_value =
        dual_objective(solution.dual, phase2_cost);
    lp_stats().optimal.fetch_add(1);
    if (solution.dual_objective_value == solution.objective_value) {
      lp_stats().duality_verified.fetch_add(1);
    } else {
      lp_stats().duality_failures.fetch_add(1);
      throw Error("internal simplex error: strong duality check failed");
    }
    return solution;
  }

 private:
  // Equality-form layout: structural columns (shifted/split originals),
  // then one slack per inequality row (structural + bound rows), then one
  // artificial per row. rhs kept separately, always >= 0.
  void build() {
    const int n = problem_.num_vars();
    offsets_.assign(n, Rat(0));
    var_cols_.assign(n, {});
    for (int j = 0; j < n; ++j) {
      if (problem_.lower[j]) {
        offsets_[j] = *problem_.lower[j];
        var_cols_[j].push_back(add_column({j, +1}));
      } else if (problem_.upper[j]) {
        offsets_[j] = *problem_.upper[j];
        var_cols_[j].push_back(add_column({j, -1}));
      } else {
        var_cols_[j].push_back(add_column({j, +1}));
        var_cols_[j].push_back(add_column({j, -1}));
      }
    }

    // Structural rows, then synthetic upper-bound rows x'_j <= u_j - l_j.
    struct RawRow {
      RatVector coef;  // over structural columns
      Sense sense;
      Rat rhs;
      int source;  // original row index or -1 for bound rows
      int bound_var = -1;
    };
    std::vector<RawRow> raw;
    for (std::size_t i = 0; i < problem_.rows.size(); ++i) {
      const LpRow& row = problem_.rows[i];
      RawRow r;
      r.coef.assign(num_structural_, Rat(0));
      r.rhs = row.rhs;
      r.sense = row.sense;
      r.source = static_cast<int>(i);
      for (int j = 0; j < n; ++j) {
        if (row.coef[j] == 0) continue;
        r.rhs -= row.coef[j] * offsets_[j];
        for (int c : var_cols_[j]) r.coef[c] += row.coef[j] * columns_[c].sign;
      }
      raw.push_back(std::move(r));
    }
    for (int j = 0; j < n; ++j) {
      if (problem_.lower[j] && problem_.upper[j]) {
        RawRow r;
        r.coef.assign(num_structural_, Rat(0));
        r.coef[var_cols_[j][0]] = 1;
        r.rhs = *problem_.upper[j] - *problem_.lower[j];
        r.sense = Sense::LE;
        r.source = -1;
        r.bound_var = j;
        raw.push_back(std::move(r));
      }
    }

    const int m = static_cast<int>(raw.size());
    int num_slacks = 0;
    for (const auto& r : raw)
      if (r.sense != Sense::EQ) ++num_slacks;
    slack_begin_ = num_structural_;
    art_begin_ = num_structural_ + num_slacks;
    total_cols_ = art_begin_ + m;

    tab_.assign(m, RatVector(total_cols_, Rat(0)));
    rhs_.assign(m, Rat(0));
    basis_.assign(m, 0);
    row_source_.assign(m, -1);
    row_bound_var_.assign(m, -1);
    row_negated_.assign(m, false);
    row_art_.resize(m);
    for (int i = 0; i < m; ++i) row_art_[i] = art_begin_ + i;

    int slack = slack_begin_;
    for (int i = 0; i < m; ++i) {
      RawRow& r = raw[i];
      for (int c = 0; c < num_structural_; ++c) tab_[i][c] = std::move(r.coef[c]);
      rhs_[i] = std::move(r.rhs);
      row_source_[i] = r.source;
      row_bound_var_[i] = r.bound_var;
      if (r.sense != Sense::EQ) {
        tab_[i][slack] = (r.sense == Sense::LE) ? 1 : -1;
        slack_of_row_.push_back(slack);
        ++slack;
      } else {
        slack_of_row_.push_back(-1);
      }
      if (rhs_[i] < 0) {
        row_negated_[i] = true;
        rhs_[i] = -rhs_[i];
        for (int c = 0; c < total_cols_; ++c)
          if (tab_[i][c] != 0) tab_[i][c] = -tab_[i][c];
      }
      tab_[i][art_begin_ + i] = 1;
      basis_[i] = art_begin_ + i;
    }
  }

  int add_column(Column col) {
    columns_.push_back(col);
    return num_structural_++;
  }

  // Bland's rule primal simplex for min cost^T x over the current tableau.
  // Returns the objective value; sets unbounded_col_ >= 0 when unbounded.
  Rat iterate(const RatVector& cost, bool allow_artificials) {
    unbounded_col_ = -1;
    const int m = static_cast<int>(tab_.size());
    // Reduced costs r = cost - cost_B^T * tab, value = cost_B^T rhs.
    RatVector reduced = cost;
    Rat value = 0;
    for (int i = 0; i < m; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      value += cb * rhs_[i];
      for (int c = 0; c < total_cols_; ++c) {
        if (tab_[i][c] != 0) reduced[c] -= cb * tab_[i][c];
      }
    }
    const int scan_end = allow_artificials ? total_cols_ : art_begin_;
    while (true) {
      int entering = -1;
      for (int c = 0; c < scan_end; ++c) {
        if (reduced[c] < 0) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return value;

      int leaving = -1;
      Rat best_ratio;
      for (int i = 0; i < m; ++i) {
        if (tab_[i][entering] <= 0) continue;
        Rat ratio = rhs_[i] / tab_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        unbounded_col_ = entering;
        return value;
      }
      pivot(leaving, entering, reduced, value);
    }
  }

  void pivot(int pr, int pc, RatVector& reduced, Rat& value) {
    const int m = static_cast<int>(tab_.size());
    Rat inv = 1 / tab_[pr][pc];
    if (inv != 1) {
      for (int c = 0; c < total_cols_; ++c)
        if (tab_[pr][c] != 0) tab_[pr][c] *= inv;
      rhs_[pr] *= inv;
    }
    tab_[pr][pc] = 1;
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      const Rat factor = tab_[i][pc];
      if (factor == 0) continue;
      for (int c = 0; c < total_cols_; ++c) {
        if (tab_[pr][c] != 0) tab_[i][c] -= factor * tab_[pr][c];
      }
      tab_[i][pc] = 0;
      rhs_[i] -= factor * rhs_[pr];
    }
    const Rat rfactor = reduced[pc];
    if (rfactor != 0) {
      for (int c = 0; c < total_cols_; ++c) {
        if (tab_[pr][c] != 0) reduced[c] -= rfactor * tab_[pr][c];
      }
      reduced[pc] = 0;
      value += rfactor * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  // After a zero-value Phase I, pivot remaining basic artificials onto
  // structural columns; rows that cannot pivot are redundant and dropped.
  void drive_out_artificials() {
    for (int i = static_cast<int>(tab_.size()); i-- > 0;) {
      if (basis_[i] < art_begin_) continue;
      int pc = -1;
      for (int c = 0; c < art_begin_; ++c) {
        if (tab_[i][c] != 0) {
          pc = c;
          break;
        }
      }
      if (pc >= 0) {
        RatVector dummy(total_cols_, Rat(0));
        Rat dummy_value = 0;
        pivot(i, pc, dummy, dummy_value);
      } else {
        drop_row(i);
      }
    }
  }

  void drop_row(int i) {
    tab_.erase(tab_.begin() + i);
    rhs_.erase(rhs_.begin() + i);
    basis_.erase(basis_.begin() + i);
    row_source_.erase(row_source_.begin() + i);
    row_bound_var_.erase(row_bound_var_.begin() + i);
    row_negated_.erase(row_negated_.begin() + i);
    slack_of_row_.erase(slack_of_row_.begin() + i);
    row_art_.erase(row_art_.begin() + i);
    // The dropped row's artificial column stays; it can never re-enter.
  }

  RatVector map_primal() const {
    RatVector standard(total_cols_, Rat(0));
    for (std::size_t i = 0; i < tab_.size(); ++i) standard[basis_[i]] = rhs_[i];
    RatVector x(problem_.num_vars());
    for (int j = 0; j < problem_.num_vars(); ++j) {
      x[j] = offsets_[j];
      for (int c : var_cols_[j]) x[j] += Rat(columns_[c].sign) * standard[c];
    }
    return x;
  }

  RatVector map_ray() const {
    RatVector standard(total_cols_, Rat(0));
    standard[unbounded_col_] = 1;
    for (std::size_t i = 0; i < tab_.size(); ++i)
      standard[basis_[i]] = -tab_[i][unbounded_col_];
    RatVector d(problem_.num_vars(), Rat(0));
    for (int j = 0; j < problem_.num_vars(); ++j) {
      for (int c : var_cols_[j]) d[j] += Rat(columns_[c].sign) * standard[c];
    }
    return d;
  }

  // Multipliers of the equality system via the artificial (identity)
  // columns: y_r = cost_B^T (B^{-1} e_r), and B^{-1} e_r is exactly the
  // current content of row r's artificial column. Sign is restored on
  // negated rows; rows dropped as redundant keep multiplier 0.
  RatVector map_duals(const RatVector& cost) const {
    RatVector dual(problem_.rows.size(), Rat(0));
    bound_dual_upper_.assign(problem_.num_vars(), Rat(0));
    const int m = static_cast<int>(tab_.size());
    for (int r = 0; r < m; ++r) {
      const int art_col = row_art_[r];
      Rat y = 0;
      for (int i = 0; i < m; ++i) {
        const Rat& cb = cost[basis_[i]];
        if (cb != 0 && tab_[i][art_col] != 0) y += cb * tab_[i][art_col];
      }
      if (row_negated_[r]) y = -y;
      if (row_source_[r] >= 0) {
        dual[row_source_[r]] = y;
      } else {
        bound_dual_upper_[row_bound_var_[r]] = y;
      }
    }
    return dual;
  }

  // Original-space dual objective: b^T y + l^T lambda - u^T mu, with
  // lambda from reduced costs of shifted columns, mu from bound-row duals
  // and negated-column reduced costs.
  Rat dual_objective(const RatVector& dual, const RatVector& cost) const {
    const int m = static_cast<int>(tab_.size());
    // Reduced costs of structural columns.
    RatVector reduced(cost.begin(), cost.begin() + total_cols_);
    for (int i = 0; i < m; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int c = 0; c < total_cols_; ++c)
        if (tab_[i][c] != 0) reduced[c] -= cb * tab_[i][c];
    }
    Rat value = 0;
    for (std::size_t i = 0; i < problem_.rows.size(); ++i)
      value += dual[i] * problem_.rows[i].rhs;
    for (int j = 0; j < problem_.num_vars(); ++j) {
      if (problem_.lower[j]) {
        // lambda_j = reduced cost of the shifted (+1) column.
        value += reduced[var_cols_[j][0]] * (*problem_.lower[j]);
        if (problem_.upper[j]) {
          // mu_j = -y_bound (bound row is a LE row, y <= 0).
          value += bound_dual_upper_[j] * (*problem_.upper[j]);
        }
      } else if (problem_.upper[j]) {
        // x = u - x'': mu_j = reduced cost of the negated column,
        // contribution -mu_j * u_j.
        value -= reduced[var_cols_[j][0]] * (*problem_.upper[j]);
      }
    }
    return value;
  }

  const LpProblem& problem_;
  std::vector<Column> columns_;
  std::vector<std::vector<int>> var_cols_;
  RatVector offsets_;

  std::vector<RatVector> tab_;
  RatVector rhs_;
  std::vector<int> basis_;
  std::vector<int> row_source_;
  std::vector<int> row_bound_var_;
  std::vector<bool> row_negated_;
  std::vector<int> slack_of_row_;
  std::vector<int> row_art_;

  int num_structural_ = 0;
  int slack_begin_ = 0;
  int art_begin_ = 0;
  int total_cols_ = 0;
  int unbounded_col_ = -1;
  mutable RatVector bound_dual_upper_;
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  problem.validate();
  SimplexTableau tableau(problem);
  return tableau.run();
}

LpProblem lp_add_row(LpProblem problem, LpRow row) {
  if (static_cast<int>(row.coef.size()) != problem.num_vars())
    throw DimensionMismatch("row length must equal the variable count");
  problem.rows.push_back(std::move(row));
  return problem;
}

const LpSolution& LpSolver::solve() {
  if (!cached_) cached_ = lp_solve(problem_);
  return *cached_;
}

void LpSolver::add_row(LpRow row) {
  if (static_cast<int>(row.coef.size()) != problem_.num_vars())
    throw DimensionMismatch("row length must equal the variable count");
  if (cached_ && cached_->status == LpStatus::Optimal) {
    // A new row only shrinks the feasible set: if the old optimum still
    // satisfies it, the old optimum stays optimal.
    Rat lhs = 0;
    for (int j = 0; j < problem_.num_vars(); ++j)
      lhs += row.coef[j] * cached_->primal[j];
    bool satisfied = (row.sense == Sense::LE && lhs <= row.rhs) ||
                     (row.sense == Sense::GE && lhs >= row.rhs) ||
                     (row.sense == Sense::EQ && lhs == row.rhs);
    if (!satisfied) cached_.reset();
    if (cached_) cached_->dual.push_back(Rat(0));
  } else {
    cached_.reset();
  }
  problem_.rows.push_back(std::move(row));
}

}  // namespace mixknap
