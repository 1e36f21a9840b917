#include "mixknap/structured.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mixknap/error.hpp"

namespace mixknap {

BestChain best_T_shortest_path(const Instance& instance, int m,
                               const RatVector& z_star) {
  if (m < 0 || m > instance.nu()) throw Error("m must lie in [0, nu]");
  BestChain best;
  best.cost = 0;
  if (m == 0) return best;  // only the empty chain exists

  // cost_from[i]: cheapest completion from node i to the sink m.
  std::vector<Rat> cost_from(m + 1, Rat(0));
  std::vector<int> next(m + 1, m);
  for (int i = m - 1; i >= 0; --i) {
    bool first = true;
    for (int j = i + 1; j <= m; ++j) {
      Rat c = (instance.h(i) - instance.h(j)) * z_star[i] + cost_from[j];
      if (first || c < cost_from[i]) {
        cost_from[i] = std::move(c);
        next[i] = j;
        first = false;
      }
    }
  }

  // Any source with the top value works; scan them all, prefer the first.
  int source = -1;
  for (int i = 0; i < m; ++i) {
    if (instance.h(i) != instance.h(0)) break;
    if (source < 0 || cost_from[i] < cost_from[source]) source = i;
  }
  best.cost = cost_from[source];
  for (int node = source; node != m; node = next[node]) best.T.push_back(node);
  return best;
}

namespace {

struct PairSetup {
  int sigma = 0;
  KIndexMap kmap;
  BestChain chain;
  /// Tail pool sorted by z* descending (ties by ascending index).
  std::vector<int> pool;
};

// Hypothesis checks shared by a whole m (independent of r). Throws
// ConfigViolation naming the failed condition.
PairSetup setup_for_m(const Instance& instance, const RatVector& z_star, int m) {
  const int n = instance.n();
  if (m < 0 || m > instance.nu()) throw ConfigViolation("m outside [0, nu]");
  for (int j = 0; j < n; ++j) {
    if (instance.a(j) > instance.s(m))
      throw ConfigViolation("a_j <= s(m) must hold for every scenario");
  }
  Rat sigma_rat = instance.p() - instance.s(m);
  if (!is_integral(sigma_rat) || sigma_rat < 0)
    throw ConfigViolation("p - s(m) must be a nonnegative integer");
  for (int k = m + 1; k <= instance.nu(); ++k) {
    Rat gap = instance.s(k) - instance.s(m);
    if (!is_integral(gap) || gap < 1)
      throw ConfigViolation("prefix gap s(k) - s(m) must be a positive integer "
                            "for every k in (m, nu]");
  }

  PairSetup setup;
  setup.sigma = static_cast<int>(to_long(sigma_rat));
  setup.kmap = k_index_map(instance, m);
  setup.chain = best_T_shortest_path(instance, m, z_star);

  if (setup.sigma > 0) {
    const int pool_lo = std::max(m + 1, setup.kmap.at(setup.sigma));
    for (int j = pool_lo; j < n; ++j) {
      if (instance.a(j) == 1) setup.pool.push_back(j);
    }
    std::stable_sort(setup.pool.begin(), setup.pool.end(), [&](int x, int y) {
      return z_star[x] > z_star[y];
    });
  }
  return setup;
}

void check_r(const Instance& instance, const PairSetup& setup, int m, int r) {
  if (r < 0 || r > setup.sigma)
    throw ConfigViolation("r outside [0, p - s(m)]");
  // Strictness is needed through position r+1 (or sigma when r = sigma).
  const int strict_until = std::min(r + 1, setup.sigma);
  for (int j = 2; j <= strict_until; ++j) {
    if (setup.kmap.at(j - 1) >= setup.kmap.at(j))
      throw ConfigViolation("k(1) < .. < k(r+1) must be strict");
  }
  for (int j = 1; j <= r; ++j) {
    const int fj = setup.kmap.at(j);
    if (fj < m + 1 || instance.a(fj) != 1)
      throw ConfigViolation("forced set F must lie in A_m");
  }
}

SeparationResult separate_pair(const Instance& instance,
                               const SeparationQuery& query,
                               const PairSetup& setup, int m, int r) {
  check_r(instance, setup, m, r);
  const int sigma = setup.sigma;

  // Forced positions take q_j = k(j); the rest draw from the pool.
  std::vector<char> forced(instance.n(), 0);
  for (int j = 1; j <= r; ++j) forced[setup.kmap.at(j)] = 1;
  std::vector<int> chosen;
  for (int j : setup.pool) {
    if (static_cast<int>(chosen.size()) == sigma - r) break;
    if (!forced[j]) chosen.push_back(j);
  }
  if (static_cast<int>(chosen.size()) < sigma - r)
    throw ConfigViolation("tail pool too small for p - s(m) - r positions");

  // Tail coefficients decrease along positions, so violation is maximized
  // by pairing later positions with larger z*: assign ascending z* to
  // ascending positions.
  std::sort(chosen.begin(), chosen.end(), [&](int x, int y) {
    if (query.z_star[x] != query.z_star[y])
      return query.z_star[x] < query.z_star[y];
    return x < y;
  });

  FdiSpec spec;
  spec.m = m;
  spec.T = setup.chain.T;
  for (int j = 1; j <= r; ++j) spec.S.push_back(setup.kmap.at(j));
  spec.S.insert(spec.S.end(), chosen.begin(), chosen.end());

  FdiCut built = fdi_cut(instance, spec);
  SeparationResult result;
  Rat lhs = 0;
  for (int t : spec.T) lhs += built.cut.alpha[t] * query.z_star[t];
  for (int q : spec.S) lhs += built.cut.alpha[q] * query.z_star[q];
  result.lp_value = lhs - built.cut.beta;
  result.violation = -(query.y_star + result.lp_value);
  if (result.violation > 0) {
    result.verdict = SeparationVerdict::CutFound;
    result.cut = std::move(built.cut);
  } else {
    result.verdict = SeparationVerdict::InsideForFamily;
    result.cut = std::move(built.cut);
  }
  return result;
}

}  // namespace

SeparationResult separate_structured(const Instance& instance,
                                     const SeparationQuery& query, int m,
                                     int r) {
  query.validate();
  if (static_cast<int>(query.z_star.size()) != instance.n())
    throw DimensionMismatch("z* length must equal n");
  PairSetup setup = setup_for_m(instance, query.z_star, m);
  return separate_pair(instance, query, setup, m, r);
}

StructuredAllResult separate_structured_all(const Instance& instance,
                                            const SeparationQuery& query,
                                            int jobs) {
  query.validate();
  if (static_cast<int>(query.z_star.size()) != instance.n())
    throw DimensionMismatch("z* length must equal n");

  struct PairResult {
    int m, r;
    SeparationResult sep;
  };
  std::vector<int> eligible_m;
  for (int m = 0; m <= instance.nu(); ++m) eligible_m.push_back(m);

  auto run_m = [&](int m) {
    std::vector<PairResult> out;
    PairSetup setup;
    try {
      setup = setup_for_m(instance, query.z_star, m);
    } catch (const ConfigViolation&) {
      return out;
    }
    for (int r = 0; r <= setup.sigma; ++r) {
      try {
        out.push_back({m, r, separate_pair(instance, query, setup, m, r)});
      } catch (const ConfigViolation&) {
        // Inadmissible (m, r): skipped by contract.
      }
    }
    return out;
  };

  std::vector<std::vector<PairResult>> buckets(eligible_m.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < eligible_m.size(); ++i)
      buckets[i] = run_m(eligible_m[i]);
  } else {
    std::vector<std::thread> workers;
    std::atomic<std::size_t> cursor{0};
    const int worker_count =
        std::min<int>(jobs, static_cast<int>(eligible_m.size()));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        while (true) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= eligible_m.size()) return;
          buckets[i] = run_m(eligible_m[i]);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  StructuredAllResult all;
  bool any = false, have_best = false;
  for (const auto& bucket : buckets) {
    for (const auto& pr : bucket) {
      any = true;
      all.per_pair.push_back({pr.m, pr.r, pr.sep.violation});
      if (!have_best || pr.sep.violation > all.result.violation) {
        all.result = pr.sep;
        have_best = true;
      }
    }
  }
  if (!any) {
    all.result.verdict = SeparationVerdict::FamilyEmpty;
    all.result.lp_value = 0;
    all.result.violation = 0;
  }
  return all;
}

}  // namespace mixknap
