#include "mixknap/instance.hpp"

#include <algorithm>
#include <numeric>

#include "mixknap/error.hpp"

namespace mixknap {

Instance Instance::canonicalize(RatVector h_raw, RatVector a_raw, Rat p,
                                bool drop_zero_weights) {
  if (h_raw.size() != a_raw.size())
    throw RejectsInstance("h and a must have equal length");
  if (p < 0) throw RejectsInstance("capacity p must be nonnegative");

  if (drop_zero_weights) {
    RatVector h2, a2;
    for (std::size_t j = 0; j < a_raw.size(); ++j) {
      if (a_raw[j] != 0) {
        h2.push_back(h_raw[j]);
        a2.push_back(a_raw[j]);
      }
    }
    h_raw = std::move(h2);
    a_raw = std::move(a2);
  }

  const int n = static_cast<int>(h_raw.size());
  if (n < 2) throw RejectsInstance("need at least 2 scenarios");

  Rat total = 0;
  for (int j = 0; j < n; ++j) {
    if (h_raw[j] < 0) throw RejectsInstance("negative scenario value h");
    if (a_raw[j] < 0) throw RejectsInstance("negative weight a");
    if (a_raw[j] > p)
      throw RejectsInstance("weight a_" + std::to_string(j) +
                            " exceeds capacity p");
    total += a_raw[j];
  }
  if (total <= p) throw RejectsInstance("sum of weights must exceed p");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return h_raw[i] > h_raw[j]; });

  Instance inst;
  inst.p_ = std::move(p);
  inst.h_.reserve(n);
  inst.a_.reserve(n);
  inst.orig_.reserve(n);
  for (int idx : order) {
    inst.h_.push_back(h_raw[idx]);
    inst.a_.push_back(a_raw[idx]);
    inst.orig_.push_back(idx);
  }
  inst.compute_derived();
  return inst;
}

void Instance::compute_derived() {
  const int n = this->n();
  s_.assign(n + 1, Rat(0));
  for (int k = 1; k <= n; ++k) s_[k] = s_[k - 1] + a_[k - 1];
  nu_ = 0;
  for (int k = 0; k <= n; ++k) {
    if (s_[k] <= p_) nu_ = k;
  }
  // sum(a) > p guarantees nu < n, so h_tail = h(nu) is always defined.
}

Instance Instance::rescaled(const Rat& d) const {
  if (d <= 0) throw Error("rescale factor must be positive");
  Instance inst;
  inst.h_ = h_;
  inst.a_ = a_;
  inst.orig_ = orig_;
  inst.p_ = p_ * d;
  for (Rat& w : inst.a_) w *= d;
  inst.compute_derived();
  return inst;
}

bool Instance::feasible(const std::vector<char>& z) const {
  Rat load = 0;
  for (int j = 0; j < n(); ++j) {
    if (z[j]) load += a_[j];
  }
  return load <= p_;
}

Rat Instance::min_y(const std::vector<char>& z) const {
  // h is sorted nonincreasing, so the first uncovered scenario dominates.
  for (int j = 0; j < n(); ++j) {
    if (!z[j]) return h_[j];
  }
  throw Error("z covers all scenarios; infeasible for sum(a) > p");
}

void ScenarioSource::validate() const {
  if (xi.size() != pi.size())
    throw RejectsInstance("xi and pi must have equal length");
  Rat total = 0;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    if (pi[j] <= 0) throw RejectsInstance("probabilities must be positive");
    if (xi[j] < 0) throw RejectsInstance("realizations must be nonnegative");
    total += pi[j];
  }
  if (total != 1) throw RejectsInstance("probabilities must sum to 1");
  if (epsilon <= 0 || epsilon >= 1)
    throw RejectsInstance("epsilon must lie in (0,1)");
}

Instance from_chance_constraint(const ScenarioSource& src) {
  src.validate();
  RatVector h, a;
  for (std::size_t j = 0; j < src.pi.size(); ++j) {
    if (src.pi[j] > src.epsilon) continue;  // indicator forced to 0
    h.push_back(src.xi[j]);
    a.push_back(src.pi[j]);
  }
  if (h.size() < 2)
    throw RejectsInstance("fewer than 2 scenarios remain after preprocessing");
  return Instance::canonicalize(std::move(h), std::move(a), src.epsilon);
}

}  // namespace mixknap
