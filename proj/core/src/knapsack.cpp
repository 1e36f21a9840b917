#include "mixknap/knapsack.hpp"

#include <algorithm>
#include <numeric>

#include "mixknap/error.hpp"

namespace mixknap {

namespace {

constexpr long kDpCapacityLimit = 1000000;

// Depth-first branch and bound with fractional (LP relaxation) bound.
// Items must be sorted by value/weight nonincreasing, all values > 0,
// all weights > 0 and <= cap.
class BranchAndBound {
 public:
  BranchAndBound(const std::vector<KernelItem>& items, const Rat& cap)
      : items_(items), cap_(cap) {}

  KernelResult run() {
    best_value_ = 0;
    best_set_.clear();
    current_.clear();
    Rat value = 0, load = 0;
    dive(0, value, load);
    return {best_value_, best_set_};
  }

 private:
  void dive(std::size_t depth, Rat& value, Rat& load) {
    if (depth == items_.size()) {
      if (value > best_value_) {
        best_value_ = value;
        best_set_ = current_;
      }
      return;
    }
    // Fractional bound on the remaining suffix.
    Rat bound = value;
    Rat room = cap_ - load;
    for (std::size_t i = depth; i < items_.size(); ++i) {
      if (items_[i].weight <= room) {
        room -= items_[i].weight;
        bound += items_[i].value;
      } else {
        bound += items_[i].value * room / items_[i].weight;
        break;
      }
    }
    if (bound <= best_value_) return;
    const KernelItem& item = items_[depth];
    if (load + item.weight <= cap_) {
      value += item.value;
      load += item.weight;
      current_.push_back(item.index);
      dive(depth + 1, value, load);
      current_.pop_back();
      value -= item.value;
      load -= item.weight;
    }
    dive(depth + 1, value, load);
  }

  const std::vector<KernelItem>& items_;
  const Rat& cap_;
  Rat best_value_;
  std::vector<int> best_set_;
  std::vector<int> current_;
};

// Capacity DP over integer-scaled weights. Requires every scaled weight
// to fit in long and the scaled capacity in [0, kDpCapacityLimit].
KernelResult dp_solve(const std::vector<KernelItem>& items, long cap,
                      const std::vector<long>& weights) {
  const std::size_t m = items.size();
  std::vector<Rat> best(cap + 1, Rat(0));
  // take[i][w]: item i used in the optimum for capacity w at stage i.
  std::vector<std::vector<bool>> take(m, std::vector<bool>(cap + 1, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (long w = cap; w >= weights[i]; --w) {
      Rat with = best[w - weights[i]] + items[i].value;
      if (with > best[w]) {
        best[w] = with;
        take[i][w] = true;
      }
    }
  }
  KernelResult result;
  result.value = best[cap];
  long w = cap;
  for (std::size_t i = m; i-- > 0;) {
    if (take[i][w]) {
      result.chosen.push_back(items[i].index);
      w -= weights[i];
    }
  }
  std::reverse(result.chosen.begin(), result.chosen.end());
  return result;
}

}  // namespace

KernelResult knapsack_max(std::vector<KernelItem> items, const Rat& cap) {
  KernelResult result;
  result.value = 0;
  if (cap < 0) throw Error("knapsack capacity must be nonnegative");

  // Free items first, then discard everything that can never help.
  std::vector<KernelItem> candidates;
  for (auto& item : items) {
    if (item.value <= 0) continue;
    if (item.weight == 0) {
      result.value += item.value;
      result.chosen.push_back(item.index);
      continue;
    }
    if (item.weight > cap) continue;
    candidates.push_back(std::move(item));
  }
  if (candidates.empty()) {
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
  }

  // Try exact scaling to a small integer capacity.
  mpz_class lcm = 1;
  for (const auto& item : candidates)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), item.weight.get_den().get_mpz_t());
  Rat scaled_cap = cap * Rat(lcm);
  mpz_class cap_floor;
  mpz_fdiv_q(cap_floor.get_mpz_t(), scaled_cap.get_num().get_mpz_t(),
             scaled_cap.get_den().get_mpz_t());

  bool dp_ok = cap_floor.fits_slong_p() && cap_floor.get_si() <= kDpCapacityLimit;
  std::vector<long> weights;
  if (dp_ok) {
    for (const auto& item : candidates) {
      Rat w = item.weight * Rat(lcm);
      if (!w.get_num().fits_slong_p()) {
        dp_ok = false;
        break;
      }
      weights.push_back(w.get_num().get_si());
    }
  }

  KernelResult packed;
  if (dp_ok) {
    packed = dp_solve(candidates, cap_floor.get_si(), weights);
  } else {
    std::sort(candidates.begin(), candidates.end(),
              [](const KernelItem& x, const KernelItem& y) {
                // value/weight descending; stable on ties by index.
                Rat lhs = x.value * y.weight;
                Rat rhs = y.value * x.weight;
                if (lhs != rhs) return lhs > rhs;
                return x.index < y.index;
              });
    packed = BranchAndBound(candidates, cap).run();
  }
  result.value += packed.value;
  result.chosen.insert(result.chosen.end(), packed.chosen.begin(), packed.chosen.end());
  std::sort(result.chosen.begin(), result.chosen.end());
  return result;
}

KnapRestriction KnapRestriction::at(const Instance& inst, int k) {
  if (k < 0 || k > inst.nu())
    throw Error("restriction index k must lie in [0, nu]");
  return {&inst, k, inst.capacity_at(k)};
}

FkResult minimize_fk(const KnapRestriction& restriction, const RatVector& alpha) {
  const Instance& inst = *restriction.instance;
  if (static_cast<int>(alpha.size()) != inst.n())
    throw DimensionMismatch("alpha length must equal n");

  std::vector<KernelItem> items;
  for (int j = restriction.k; j < inst.n(); ++j) {
    if (alpha[j] < 0) items.push_back({j, -alpha[j], inst.a(j)});
  }
  KernelResult packed = knapsack_max(std::move(items), restriction.capacity);

  FkResult result;
  result.value = -packed.value;
  result.argmin.assign(inst.n(), 0);
  for (int j = 0; j < restriction.k; ++j) result.argmin[j] = 1;
  for (int j : packed.chosen) result.argmin[j] = 1;
  return result;
}

GkResult minimize_gk(const KnapRestriction& restriction,
                     const std::vector<int>& S, const RatVector& delta_on_S) {
  const Instance& inst = *restriction.instance;
  if (S.size() != delta_on_S.size())
    throw DimensionMismatch("Delta must be supported exactly on S");

  Rat total = 0;
  std::vector<KernelItem> items;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (delta_on_S[i] < 0) throw Error("Delta must be nonnegative");
    if (S[i] < restriction.k) continue;
    total += delta_on_S[i];
    items.push_back({S[i], delta_on_S[i], inst.a(S[i])});
  }
  KernelResult packed = knapsack_max(std::move(items), restriction.capacity);
  return {total - packed.value, packed.chosen};
}

DeltaBracket delta_bracket(const std::vector<int>& S, const RatVector& delta_on_S,
                           int k, const Rat& l) {
  if (S.size() != delta_on_S.size())
    throw DimensionMismatch("Delta must be supported exactly on S");
  long below = 0;
  RatVector tail;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] < k) {
      ++below;
    } else {
      tail.push_back(delta_on_S[i]);
    }
  }
  Rat count_rat = l - below;
  DeltaBracket result;
  result.value = 0;
  if (count_rat <= 0) return result;
  // The count is a cardinality; a fractional l is floored.
  long count = to_long(floor_rat(count_rat));
  if (count > static_cast<long>(tail.size())) {
    count = static_cast<long>(tail.size());
    result.clamped = true;
  }
  std::sort(tail.begin(), tail.end());
  for (long i = 0; i < count; ++i) result.value += tail[i];
  return result;
}

Rat fk_closed_form(const KnapRestriction& restriction, int m,
                   const std::vector<int>& q_ordered_S, const RatVector& alpha) {
  const Instance& inst = *restriction.instance;
  const int n = inst.n();
  const int k = restriction.k;
  if (static_cast<int>(alpha.size()) != n)
    throw DimensionMismatch("alpha length must equal n");
  if (m < 0 || m > inst.nu()) throw HypothesisViolated("m must lie in [0, nu]");

  Rat sigma = inst.p() - inst.s(m);
  if (!is_integral(sigma)) throw HypothesisViolated("p - s(m) must be an integer");
  if (to_long(sigma) != static_cast<long>(q_ordered_S.size()))
    throw HypothesisViolated("|S| must equal p - s(m)");

  std::vector<char> in_S(n, 0);
  for (int j : q_ordered_S) {
    if (j < m + 1 || j >= n)
      throw HypothesisViolated("S must lie within {m+1,..,n-1}");
    if (in_S[j]) throw HypothesisViolated("S has repeated indices");
    in_S[j] = 1;
    if (inst.a(j) != 1) throw HypothesisViolated("a_j = 1 required on S");
    if (alpha[j] > 0) throw HypothesisViolated("alpha <= 0 required on S");
  }
  for (int j = 0; j < n; ++j) {
    if (!in_S[j] && alpha[j] < 0)
      throw HypothesisViolated("alpha >= 0 required off S");
  }
  for (std::size_t i = 1; i < q_ordered_S.size(); ++i) {
    if (alpha[q_ordered_S[i - 1]] < alpha[q_ordered_S[i]])
      throw HypothesisViolated("alpha must be nonincreasing along q");
  }
  // Position i (1-based) beyond the prefix-gap must name an index >= kk.
  for (int kk = m + 1; kk <= inst.nu(); ++kk) {
    Rat gap = inst.s(kk) - inst.s(m);
    for (std::size_t i = 0; i < q_ordered_S.size(); ++i) {
      if (Rat(static_cast<long>(i + 1)) > gap && q_ordered_S[i] < kk)
        throw HypothesisViolated("ordering q incompatible with prefix gaps");
    }
  }

  if (k <= m) {
    Rat sum = 0;
    for (int j : q_ordered_S) sum += alpha[j];
    return sum;
  }
  Rat gap = inst.s(k) - inst.s(m);
  Rat sum = 0;
  for (std::size_t i = 0; i < q_ordered_S.size(); ++i) {
    if (Rat(static_cast<long>(i + 1)) > gap) sum += alpha[q_ordered_S[i]];
  }
  return sum;
}

}  // namespace mixknap
