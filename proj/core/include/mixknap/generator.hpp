#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mixknap/instance.hpp"

namespace mixknap {

/// Self-contained deterministic generator (SplitMix64). Used instead of
/// <random> distributions so seeded outputs are stable across standard
/// library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

struct GenerateOptions {
  int n = 5;
  std::uint64_t seed = 1;
  bool cardinality = false;  // a = 1, p = floor(0.6 n)
  bool ccp = false;          // emit a chance-constrained source instead
  std::optional<RatVector> weights;
  std::optional<RatVector> values;
  std::optional<Rat> p;
  std::optional<Rat> epsilon;
};

/// Deterministic random instance. Explicit weights/values/p pass through
/// unchanged (after canonicalization).
Instance generate_instance(const GenerateOptions& options);

/// Deterministic chance-constrained source with normalized probabilities
/// and epsilon in (max pi, 1) unless given.
ScenarioSource generate_source(const GenerateOptions& options);

}  // namespace mixknap
