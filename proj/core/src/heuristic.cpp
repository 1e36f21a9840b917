#include "mixknap/heuristic.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mixknap/error.hpp"
#include "mixknap/generator.hpp"
#include "mixknap/knapsack.hpp"
#include "mixknap/lp.hpp"

namespace mixknap {

Rat SignPattern::validate(const Instance& instance) const {
  const int n = instance.n();
  std::vector<char> seen(n, 0);
  for (int j : R) {
    if (j < 0 || j >= n || seen[j]) throw PatternViolation("R u S must partition the scenarios");
    seen[j] = 1;
  }
  Rat m_S = 0;
  bool first = true;
  for (int j : S) {
    if (j < 0 || j >= n || seen[j]) throw PatternViolation("R u S must partition the scenarios");
    seen[j] = 1;
    if (first || instance.a(j) < m_S) {
      m_S = instance.a(j);
      first = false;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!seen[j]) throw PatternViolation("R u S must partition the scenarios");
  }
  if (!S.empty() && m_S <= 0)
    throw PatternViolation("min weight on S must be positive");
  return m_S;
}

GrMembershipReport gR_membership(const Instance& instance,
                                 const SignPattern& pattern,
                                 const RatVector& delta_on_R,
                                 const RatVector& Delta_on_S, const Rat& h) {
  pattern.validate(instance);
  if (delta_on_R.size() != pattern.R.size() ||
      Delta_on_S.size() != pattern.S.size())
    throw DimensionMismatch("coefficients must match the pattern supports");
  for (const Rat& d : delta_on_R)
    if (d < 0) throw PatternViolation("delta >= 0 required on R");
  for (const Rat& D : Delta_on_S)
    if (D < 0) throw PatternViolation("Delta >= 0 required on S");

  GrMembershipReport report;
  report.member = true;
  for (int k = 0; k <= instance.nu(); ++k) {
    Rat lhs = instance.h(k) - h;
    for (std::size_t i = 0; i < pattern.R.size(); ++i) {
      if (pattern.R[i] < k) lhs += delta_on_R[i];
    }
    GkResult gk = minimize_gk(KnapRestriction::at(instance, k), pattern.S,
                              Delta_on_S);
    lhs += gk.value;
    if (lhs < 0) report.member = false;
    report.slacks.push_back(std::move(lhs));
  }
  return report;
}

namespace {

struct ThetaOutcome {
  RatVector delta, Delta;
  Rat h;
  Rat lp_value;
  bool boundary_active = false;
};

// Theta LP layout: delta (|R|), Delta (|S|), h, gamma^k (nu+1), then
// rho^k_j for each k and each S-position with index >= k.
ThetaOutcome solve_theta(const Instance& instance, const SeparationQuery& query,
                         const SignPattern& pattern, const Rat& m_S,
                         const Rat& box) {
  const int nu = instance.nu();
  const std::size_t nR = pattern.R.size(), nS = pattern.S.size();

  std::vector<std::vector<int>> rho_cols(nu + 1);
  int vars = static_cast<int>(nR + nS) + 1 + (nS ? nu + 1 : 0);
  if (nS) {
    for (int k = 0; k <= nu; ++k) {
      rho_cols[k].assign(nS, -1);
      for (std::size_t i = 0; i < nS; ++i) {
        if (pattern.S[i] >= k) rho_cols[k][i] = vars++;
      }
    }
  }

  const int col_h = static_cast<int>(nR + nS);
  const int col_gamma0 = col_h + 1;
  const Rat h_bound = instance.h(0) + Rat(instance.n()) * box;

  LpProblem lp = LpProblem::with_vars(vars);
  for (std::size_t i = 0; i < nR; ++i) {
    lp.objective[i] = query.z_star[pattern.R[i]];
    lp.lower[i] = Rat(0);
    lp.upper[i] = box;
  }
  for (std::size_t i = 0; i < nS; ++i) {
    lp.objective[nR + i] = 1 - query.z_star[pattern.S[i]];
    lp.lower[nR + i] = Rat(0);
    lp.upper[nR + i] = box;
  }
  lp.objective[col_h] = -1;
  lp.lower[col_h] = -h_bound;
  lp.upper[col_h] = h_bound;
  if (nS) {
    for (int k = 0; k <= nu; ++k) {
      for (std::size_t i = 0; i < nS; ++i) {
        int c = rho_cols[k][i];
        if (c >= 0) lp.upper[c] = Rat(0);  // rho <= 0, unbounded below
      }
    }
  }

  // Level rows: prefix delta + beta^k gamma^k + sum(rho^k) - h >= -h(k).
  for (int k = 0; k <= nu; ++k) {
    RatVector row(vars, Rat(0));
    for (std::size_t i = 0; i < nR; ++i) {
      if (pattern.R[i] < k) row[i] = 1;
    }
    if (nS) {
      long below = 0;
      for (std::size_t i = 0; i < nS; ++i) {
        if (pattern.S[i] < k) ++below;
      }
      Rat beta_k = Rat(static_cast<long>(nS) - below) -
                   floor_rat(instance.capacity_at(k) / m_S);
      // A negative count means the capacity can cover all of S beyond k;
      // the order-statistic term is an empty sum.
      if (beta_k < 0) beta_k = 0;
      row[col_gamma0 + k] = beta_k;
      for (std::size_t i = 0; i < nS; ++i) {
        int c = rho_cols[k][i];
        if (c >= 0) row[c] = 1;
      }
    }
    row[col_h] = -1;
    lp.add_row(std::move(row), Sense::GE, -instance.h(k));
  }
  // Dual-feasibility rows: gamma^k + rho^k_j <= Delta_j for j in S, j >= k.
  if (nS) {
    for (int k = 0; k <= nu; ++k) {
      for (std::size_t i = 0; i < nS; ++i) {
        int c = rho_cols[k][i];
        if (c < 0) continue;
        RatVector row(vars, Rat(0));
        row[col_gamma0 + k] = 1;
        row[c] = 1;
        row[nR + i] = -1;
        lp.add_row(std::move(row), Sense::LE, Rat(0));
      }
    }
  }

  LpSolution solution = lp_solve(lp);
  if (solution.status != LpStatus::Optimal)
    throw Error("theta LP must stay boxed-feasible");

  ThetaOutcome outcome;
  outcome.lp_value = solution.objective_value;
  outcome.delta.assign(solution.primal.begin(), solution.primal.begin() + nR);
  outcome.Delta.assign(solution.primal.begin() + nR,
                       solution.primal.begin() + nR + nS);
  outcome.h = solution.primal[col_h];
  for (const Rat& d : outcome.delta)
    if (d == box) outcome.boundary_active = true;
  for (const Rat& D : outcome.Delta)
    if (D == box) outcome.boundary_active = true;
  if (outcome.h == h_bound || outcome.h == -h_bound)
    outcome.boundary_active = true;
  return outcome;
}

}  // namespace

SeparationResult separate_heuristic(const Instance& instance,
                                    const SeparationQuery& query,
                                    const SignPattern& pattern, const Rat& box) {
  query.validate();
  if (static_cast<int>(query.z_star.size()) != instance.n())
    throw DimensionMismatch("z* length must equal n");
  if (box <= 0) throw Error("box must be positive");
  Rat m_S = pattern.validate(instance);

  Rat current_box = box;
  ThetaOutcome outcome = solve_theta(instance, query, pattern, m_S, current_box);
  int enlargements = 0;
  while (outcome.boundary_active && query.y_star + outcome.lp_value >= 0 &&
         enlargements < 2) {
    current_box = 2 * current_box + 1;
    outcome = solve_theta(instance, query, pattern, m_S, current_box);
    ++enlargements;
  }

  SeparationResult result;
  result.lp_value = outcome.lp_value;
  if (query.y_star + outcome.lp_value < 0) {
    result.verdict = SeparationVerdict::CutFound;
    MixingCut cut;
    cut.provenance = CutProvenance::Heuristic;
    cut.alpha.assign(instance.n(), Rat(0));
    cut.beta = outcome.h;
    for (std::size_t i = 0; i < pattern.R.size(); ++i)
      cut.alpha[pattern.R[i]] = outcome.delta[i];
    for (std::size_t i = 0; i < pattern.S.size(); ++i) {
      cut.alpha[pattern.S[i]] = -outcome.Delta[i];
      cut.beta -= outcome.Delta[i];
    }
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

SeparationResult separate_heuristic(const Instance& instance,
                                    const SeparationQuery& query,
                                    const SignPattern& pattern) {
  return separate_heuristic(instance, query, pattern, default_box(instance));
}

std::vector<SignPattern> suggest_patterns(const Instance& instance,
                                          const SeparationQuery& query,
                                          int limit) {
  const int n = instance.n();
  std::vector<SignPattern> patterns;
  auto push_if_ok = [&](SignPattern pattern) {
    if (static_cast<int>(patterns.size()) >= limit) return;
    try {
      pattern.validate(instance);
    } catch (const PatternViolation&) {
      return;
    }
    for (const SignPattern& existing : patterns) {
      if (existing.S == pattern.S) return;
    }
    patterns.push_back(std::move(pattern));
  };

  // (a) Threshold rule: small z* wants a nonnegative coefficient.
  {
    SignPattern p;
    for (int j = 0; j < n; ++j) {
      if (query.z_star[j] <= Rat(1, 2)) {
        p.R.push_back(j);
      } else {
        p.S.push_back(j);
      }
    }
    push_if_ok(std::move(p));
  }
  // (b) Uniform tails: S = {j > m : a_j = min tail weight} per level m.
  for (int m = 0; m <= instance.nu() && static_cast<int>(patterns.size()) < limit; ++m) {
    Rat tail_min = 0;
    bool first = true;
    for (int j = m + 1; j < n; ++j) {
      if (first || instance.a(j) < tail_min) {
        tail_min = instance.a(j);
        first = false;
      }
    }
    if (first || tail_min <= 0) continue;
    SignPattern p;
    for (int j = 0; j < n; ++j) {
      if (j > m && instance.a(j) == tail_min) {
        p.S.push_back(j);
      } else {
        p.R.push_back(j);
      }
    }
    push_if_ok(std::move(p));
  }
  // (c) Seeded balanced splits.
  SplitMix64 rng(0x5157c0debull);
  for (int attempt = 0; attempt < 4 * limit && static_cast<int>(patterns.size()) < limit;
       ++attempt) {
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    for (int j = n - 1; j > 0; --j)
      std::swap(order[j], order[rng.below(j + 1)]);
    SignPattern p;
    for (int i = 0; i < n; ++i) {
      if (i < n / 2) {
        p.R.push_back(order[i]);
      } else {
        p.S.push_back(order[i]);
      }
    }
    std::sort(p.R.begin(), p.R.end());
    std::sort(p.S.begin(), p.S.end());
    push_if_ok(std::move(p));
  }
  return patterns;
}

SeparationResult separate_heuristic_auto(const Instance& instance,
                                         const SeparationQuery& query,
                                         const Rat& box, int limit, int jobs) {
  std::vector<SignPattern> patterns = suggest_patterns(instance, query, limit);
  std::vector<SeparationResult> results(patterns.size());

  auto run = [&](std::size_t i) {
    results[i] = separate_heuristic(instance, query, patterns[i], box);
  };
  if (jobs <= 1 || patterns.size() <= 1) {
    for (std::size_t i = 0; i < patterns.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    const int worker_count =
        std::min<int>(jobs, static_cast<int>(patterns.size()));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        while (true) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= patterns.size()) return;
          run(i);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  SeparationResult best;
  bool have = false;
  for (const SeparationResult& r : results) {
    if (!have || r.violation > best.violation) {
      best = r;
      have = true;
    }
  }
  if (!have) {
    best.verdict = SeparationVerdict::InsideForFamily;
    best.lp_value = 0;
    best.violation = 0;
  }
  return best;
}

}  // namespace mixknap
