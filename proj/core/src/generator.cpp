#include "mixknap/generator.hpp"

#include <algorithm>

#include "mixknap/error.hpp"

namespace mixknap {

namespace {

RatVector random_nonincreasing_values(SplitMix64& rng, int n, long hi) {
  RatVector h;
  h.reserve(n);
  for (int j = 0; j < n; ++j) h.emplace_back(static_cast<long>(rng.below(hi + 1)));
  std::sort(h.begin(), h.end(), std::greater<Rat>());
  if (h[0] == 0) h[0] = 1;  // keep the instance nondegenerate
  return h;
}

}  // namespace

Instance generate_instance(const GenerateOptions& options) {
  if (options.ccp)
    throw BadFlags("generate_instance called with ccp; use generate_source");
  if (options.weights || options.values || options.p) {
    if (!(options.weights && options.values && options.p))
      throw BadFlags("explicit instances need weights, values and p together");
    return Instance::canonicalize(*options.values, *options.weights, *options.p);
  }

  const int n = options.n;
  if (n < 2) throw BadFlags("need n >= 2");
  SplitMix64 rng(options.seed);

  if (options.cardinality) {
    RatVector h = random_nonincreasing_values(rng, n, 100);
    RatVector a(n, Rat(1));
    long p = (6L * n) / 10;
    if (p < 1) p = 1;
    if (p >= n) p = n - 1;
    return Instance::canonicalize(std::move(h), std::move(a), Rat(p));
  }

  // General integer weights in [0, 20] with a_j <= p < sum(a).
  while (true) {
    RatVector a;
    long total = 0, biggest = 0;
    for (int j = 0; j < n; ++j) {
      long w = static_cast<long>(rng.below(21));
      total += w;
      biggest = std::max(biggest, w);
      a.emplace_back(w);
    }
    if (total <= biggest) continue;  // no room for a capacity
    long p = biggest + static_cast<long>(rng.below(total - biggest));
    RatVector h = random_nonincreasing_values(rng, n, 50);
    return Instance::canonicalize(std::move(h), std::move(a), Rat(p));
  }
}

ScenarioSource generate_source(const GenerateOptions& options) {
  const int n = options.n;
  if (n < 2) throw BadFlags("need n >= 2");
  SplitMix64 rng(options.seed);

  ScenarioSource src;
  long total = 0;
  std::vector<long> raw(n);
  for (int j = 0; j < n; ++j) {
    raw[j] = 1 + static_cast<long>(rng.below(20));
    total += raw[j];
  }
  long biggest = *std::max_element(raw.begin(), raw.end());
  for (int j = 0; j < n; ++j) src.pi.emplace_back(raw[j], total);
  for (int j = 0; j < n; ++j)
    src.xi.emplace_back(static_cast<long>(rng.below(101)));
  if (options.epsilon) {
    src.epsilon = *options.epsilon;
  } else {
    // epsilon strictly between max(pi) and 1.
    src.epsilon = (Rat(biggest, total) + 1) / 2;
  }
  return src;
}

}  // namespace mixknap
