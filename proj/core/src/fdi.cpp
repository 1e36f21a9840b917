#include "mixknap/fdi.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "mixknap/error.hpp"

namespace mixknap {

KIndexMap k_index_map(const Instance& instance, int m) {
  if (m < 0 || m > instance.nu()) throw Error("m must lie in [0, nu]");
  Rat sigma = instance.p() - instance.s(m);
  if (!is_integral(sigma) || sigma < 0)
    throw NotIntegral("p - s(m) must be a nonnegative integer");
  const long count = to_long(sigma);
  KIndexMap map;
  map.k_of.reserve(count);
  int k = m;
  for (long j = 1; j <= count; ++j) {
    // Largest k with s(k) - s(m) <= j; sum(a) > p keeps k below n.
    while (k + 1 <= instance.n() && instance.s(k + 1) - instance.s(m) <= j) ++k;
    map.k_of.push_back(k);
  }
  return map;
}

StarCut star_cut(const Instance& instance, const std::vector<int>& T) {
  const int nu = instance.nu();
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i] < 0 || T[i] >= nu) throw BadT("T must lie within {0,..,nu-1}");
    if (i > 0 && T[i] <= T[i - 1]) throw BadT("T must be strictly increasing");
  }
  StarCut result;
  result.cut.provenance = CutProvenance::Star;
  result.cut.alpha.assign(instance.n(), Rat(0));
  for (std::size_t i = 0; i < T.size(); ++i) {
    const Rat& next = (i + 1 < T.size()) ? instance.h(T[i + 1]) : instance.h_tail();
    result.cut.alpha[T[i]] = instance.h(T[i]) - next;
  }
  result.cut.beta = T.empty() ? instance.h_tail() : instance.h(T[0]);
  result.facet_claim = (result.cut.beta == instance.h(0));
  return result;
}

Instance rescale_knapsack(const Instance& instance, const Rat& d) {
  return instance.rescaled(d);
}

std::vector<Rat> candidate_scales(const Instance& instance) {
  std::vector<Rat> scales{Rat(1)};
  for (int j = 0; j < instance.n(); ++j) {
    if (instance.a(j) > 0) scales.push_back(1 / instance.a(j));
  }
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  return scales;
}

namespace {

// Conditions under which the explicit-family construction is justified.
// Besides the stated spec conditions, the prefix gaps s(k) - s(m) for
// m < k <= nu must be positive integers: with zero-weight or fractional
// gaps the recursion can produce an invalid cut.
void validate_spec(const Instance& scaled, const FdiSpec& spec,
                   const KIndexMap& kmap) {
  const int n = scaled.n();
  const int m = spec.m;
  const long sigma = to_long(scaled.p() - scaled.s(m));
  for (int k = m + 1; k <= scaled.nu(); ++k) {
    Rat gap = scaled.s(k) - scaled.s(m);
    if (!is_integral(gap) || gap < 1)
      throw SpecViolation("prefix gap s(k) - s(m) must be a positive integer "
                          "for every k in (m, nu]");
  }
  if (static_cast<long>(spec.S.size()) != sigma)
    throw SpecViolation("|S| must equal p - s(m)");
  std::set<int> seen;
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    const int q = spec.S[i];
    if (q < m + 1 || q >= n) throw SpecViolation("S must lie in {m+1,..,n-1}");
    if (!seen.insert(q).second) throw SpecViolation("S has repeated indices");
    if (q < kmap.at(static_cast<int>(i) + 1))
      throw SpecViolation("q_j must avoid the first k(j) scenarios");
    if (scaled.a(q) != 1) throw SpecViolation("a_j = 1 required on S");
  }
  for (int j = 0; j < n; ++j) {
    if (!seen.count(j) && scaled.a(j) > scaled.s(m))
      throw SpecViolation("a_j <= s(m) required off S");
  }
  for (std::size_t i = 0; i < spec.T.size(); ++i) {
    if (spec.T[i] < 0 || spec.T[i] >= m)
      throw SpecViolation("T must lie within {0,..,m-1}");
    if (i > 0 && spec.T[i] <= spec.T[i - 1])
      throw SpecViolation("T must be strictly increasing");
  }
}

// alpha_{q_1} = h(k(1)) - h(m); afterwards
// alpha_{q_j} = min(alpha_{q_{j-1}},
//                   h(k(j)) - h(m) - sum(alpha_{q_i} : q_i >= k(j), i < j)).
RatVector tail_coefficients(const Instance& scaled, const FdiSpec& spec,
                            const KIndexMap& kmap) {
  RatVector alpha;
  alpha.reserve(spec.S.size());
  for (std::size_t j = 1; j <= spec.S.size(); ++j) {
    const int kj = kmap.at(static_cast<int>(j));
    Rat candidate = scaled.h(kj) - scaled.h(spec.m);
    for (std::size_t i = 0; i + 1 < j; ++i) {
      if (spec.S[i] >= kj) candidate -= alpha[i];
    }
    if (j == 1) {
      alpha.push_back(std::move(candidate));
    } else {
      alpha.push_back(std::min(alpha.back(), candidate));
    }
  }
  return alpha;
}

}  // namespace

FdiCut fdi_cut(const Instance& instance, const FdiSpec& spec) {
  if (spec.scale <= 0) throw SpecViolation("scale must be positive");
  FdiCut result;
  std::optional<Instance> rescaled_storage;
  if (spec.scale != 1)
    rescaled_storage = rescale_knapsack(instance, spec.scale);
  const Instance& scaled = rescaled_storage ? *rescaled_storage : instance;
  if (spec.m < 0 || spec.m > scaled.nu())
    throw SpecViolation("m outside [0, nu]");
  {
    Rat sigma = scaled.p() - scaled.s(spec.m);
    if (!is_integral(sigma) || sigma < 0)
      throw SpecViolation("p - s(m) is not a nonnegative integer");
  }
  KIndexMap kmap = k_index_map(scaled, spec.m);
  validate_spec(scaled, spec, kmap);

  result.alpha_on_q = tail_coefficients(scaled, spec, kmap);

  MixingCut& cut = result.cut;
  cut.provenance = CutProvenance::Fdi;
  cut.alpha.assign(scaled.n(), Rat(0));
  for (std::size_t i = 0; i < spec.T.size(); ++i) {
    const Rat& next =
        (i + 1 < spec.T.size()) ? scaled.h(spec.T[i + 1]) : scaled.h(spec.m);
    cut.alpha[spec.T[i]] = scaled.h(spec.T[i]) - next;
  }
  Rat tail_sum = 0;
  for (std::size_t i = 0; i < spec.S.size(); ++i) {
    cut.alpha[spec.S[i]] = result.alpha_on_q[i];
    tail_sum += result.alpha_on_q[i];
  }
  const Rat& head = spec.T.empty() ? scaled.h(spec.m) : scaled.h(spec.T[0]);
  cut.beta = head + tail_sum;
  result.facet_claim = (head == scaled.h(0));
  return result;
}

std::vector<std::pair<Rat, std::vector<char>>> fdi_tight_points(
    const Instance& instance, const FdiSpec& spec) {
  FdiCut built = fdi_cut(instance, spec);
  if (!built.facet_claim)
    throw SpecViolation("tight-point family requires h(t_1) = h(0)");
  std::optional<Instance> rescaled_storage;
  if (spec.scale != 1)
    rescaled_storage = rescale_knapsack(instance, spec.scale);
  const Instance& scaled = rescaled_storage ? *rescaled_storage : instance;
  const int n = scaled.n();
  const int m = spec.m;
  const KIndexMap kmap = k_index_map(scaled, m);
  const RatVector& alpha_q = built.alpha_on_q;

  // Under value ties h(0) = h(t_1) the proof's family can repeat a point;
  // prepending scenario 0 to T (a zero-coefficient term, cut unchanged)
  // restores injectivity.
  std::vector<int> T = spec.T;
  if (m >= 1 && (T.empty() || T.front() != 0)) T.insert(T.begin(), 0);

  std::vector<char> in_S(n, 0), in_T(n, 0);
  for (int q : spec.S) in_S[q] = 1;
  for (int t : T) in_T[t] = 1;

  std::vector<std::pair<Rat, std::vector<char>>> points;
  points.reserve(n + 1);

  auto push_point = [&](Rat y, std::vector<char> z) {
    if (!scaled.feasible(z))
      throw Error("internal fdi error: constructed point infeasible");
    if (built.cut.lhs(y, z) != built.cut.beta)
      throw Error("internal fdi error: constructed point not tight");
    points.emplace_back(std::move(y), std::move(z));
  };

  // Chain points: cover everything before t and all of S.
  for (int t : T) {
    std::vector<char> z(n, 0);
    for (int i = 0; i < t; ++i) z[i] = 1;
    for (int q : spec.S) z[q] = 1;
    push_point(scaled.h(t), std::move(z));
  }

  // Tail points: for position j, the latest position l(j) whose recursion
  // candidate attains alpha_{q_j} yields the level h(k(l(j))).
  for (std::size_t j = 1; j <= spec.S.size(); ++j) {
    std::size_t l = 0;
    for (std::size_t cand = 1; cand <= j; ++cand) {
      Rat expr = scaled.h(kmap.at(static_cast<int>(cand))) - scaled.h(m);
      for (std::size_t i = 0; i + 1 < cand; ++i) {
        if (spec.S[i] >= kmap.at(static_cast<int>(cand))) expr -= alpha_q[i];
      }
      if (expr == alpha_q[j - 1]) l = cand;
    }
    if (l == 0) throw Error("internal fdi error: recursion level not found");
    const int level = kmap.at(static_cast<int>(l));
    std::vector<char> z(n, 1);
    for (std::size_t i = 0; i + 1 < l; ++i) {
      if (spec.S[i] >= level) z[spec.S[i]] = 0;
    }
    z[spec.S[j - 1]] = 0;
    for (int t = 0; t < n; ++t) {
      if (!in_S[t] && t >= level) z[t] = 0;
    }
    push_point(scaled.h(level), std::move(z));
  }

  // Singleton points: cover S plus one scenario outside the chain.
  for (int k = 0; k < n; ++k) {
    if (in_S[k] || in_T[k]) continue;
    std::vector<char> z(n, 0);
    for (int q : spec.S) z[q] = 1;
    z[k] = 1;
    push_point(scaled.h(0), std::move(z));
  }

  // Base point: the full prefix of length m plus S.
  {
    std::vector<char> z(n, 0);
    for (int i = 0; i < m; ++i) z[i] = 1;
    for (int q : spec.S) z[q] = 1;
    push_point(scaled.h(m), std::move(z));
  }

  if (points.size() != static_cast<std::size_t>(n + 1))
    throw Error("internal fdi error: expected n+1 points");
  std::set<std::pair<std::string, std::vector<char>>> distinct;
  for (const auto& [y, z] : points) distinct.insert({to_string(y), z});
  if (distinct.size() != points.size())
    throw Error("internal fdi error: tight points not distinct");
  return points;
}

std::vector<FdiSpec> enumerate_fdi_specs(const Instance& instance,
                                         const FdiEnumerateOptions& options) {
  std::vector<FdiSpec> specs;
  std::vector<Rat> scales =
      options.try_scales ? candidate_scales(instance) : std::vector<Rat>{Rat(1)};

  for (const Rat& d : scales) {
    if (static_cast<int>(specs.size()) >= options.limit) break;
    Instance scaled = (d == 1) ? instance : rescale_knapsack(instance, d);
    const int n = scaled.n();
    for (int m = 0; m <= scaled.nu(); ++m) {
      if (static_cast<int>(specs.size()) >= options.limit) break;
      Rat sigma_rat = scaled.p() - scaled.s(m);
      if (!is_integral(sigma_rat) || sigma_rat < 0) continue;
      bool gaps_ok = true;
      for (int k = m + 1; k <= scaled.nu(); ++k) {
        Rat gap = scaled.s(k) - scaled.s(m);
        if (!is_integral(gap) || gap < 1) {
          gaps_ok = false;
          break;
        }
      }
      if (!gaps_ok) continue;
      const long sigma = to_long(sigma_rat);
      KIndexMap kmap = k_index_map(scaled, m);

      // Items too heavy to stay outside S must be inside it, and S only
      // holds unit weights.
      std::vector<int> mandatory;
      bool m_feasible = true;
      for (int j = 0; j < n; ++j) {
        if (scaled.a(j) > scaled.s(m)) {
          if (scaled.a(j) != 1 || j < m + 1) {
            m_feasible = false;
            break;
          }
          mandatory.push_back(j);
        }
      }
      if (!m_feasible || static_cast<long>(mandatory.size()) > sigma) continue;

      std::vector<int> chosen;
      std::vector<char> used(n, 0);
      auto emit_for_S = [&](const std::vector<int>& S) {
        // Chains: all subsets of {0,..,m-1} in mask order; facets keep
        // only chains opening at the top value.
        const std::uint32_t t_limit = 1u << m;
        for (std::uint32_t t_mask = 0; t_mask < t_limit; ++t_mask) {
          if (static_cast<int>(specs.size()) >= options.limit) return;
          FdiSpec spec;
          spec.m = m;
          spec.scale = d;
          spec.S = S;
          for (int t = 0; t < m; ++t)
            if (t_mask & (1u << t)) spec.T.push_back(t);
          if (options.facets_only) {
            const Rat& head =
                spec.T.empty() ? scaled.h(m) : scaled.h(spec.T.front());
            if (head != scaled.h(0)) continue;
          }
          specs.push_back(std::move(spec));
        }
      };

      auto dfs = [&](auto&& self, long position) -> void {
        if (static_cast<int>(specs.size()) >= options.limit) return;
        if (position > sigma) {
          long missing = 0;
          for (int j : mandatory)
            if (!used[j]) ++missing;
          if (missing == 0) emit_for_S(chosen);
          return;
        }
        const int lo = std::max(m + 1, kmap.at(static_cast<int>(position)));
        for (int q = lo; q < n; ++q) {
          if (used[q] || scaled.a(q) != 1) continue;
          used[q] = 1;
          chosen.push_back(q);
          self(self, position + 1);
          chosen.pop_back();
          used[q] = 0;
          if (static_cast<int>(specs.size()) >= options.limit) return;
        }
      };
      dfs(dfs, 1);
    }
  }
  return specs;
}

}  // namespace mixknap
