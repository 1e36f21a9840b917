#include "mixknap/hull.hpp"

#include <algorithm>

#include "mixknap/error.hpp"
#include "mixknap/generator.hpp"

namespace mixknap {

std::vector<char> HullPoint::z(int n) const {
  std::vector<char> out(n, 0);
  for (int j = 0; j < n; ++j)
    if (mask & (1u << j)) out[j] = 1;
  return out;
}

std::vector<HullPoint> enumerate_hull_points(const Instance& instance, int cap) {
  const int n = instance.n();
  if (n > cap)
    throw InstanceTooLarge("hull enumeration capped at n <= " +
                           std::to_string(cap));
  std::vector<HullPoint> points;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Rat load = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) load += instance.a(j);
    }
    if (load > instance.p()) continue;
    HullPoint point;
    point.mask = mask;
    // h sorted nonincreasing: minimal y is h at the first uncovered index.
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) {
        point.y = instance.h(j);
        break;
      }
    }
    points.push_back(std::move(point));
  }
  return points;
}

namespace {

Rat cut_slack(const MixingCut& cut, const HullPoint& point) {
  Rat value = point.y - cut.beta;
  std::uint32_t mask = point.mask;
  while (mask) {
    int j = __builtin_ctz(mask);
    value += cut.alpha[j];
    mask &= mask - 1;
  }
  return value;
}

}  // namespace

ValidityReport certify_valid(const Instance& instance, const MixingCut& cut,
                             const std::vector<HullPoint>& points) {
  if (static_cast<int>(cut.alpha.size()) != instance.n())
    throw DimensionMismatch("alpha length must equal n");
  ValidityReport report;
  bool first = true;
  for (const HullPoint& point : points) {
    Rat slack = cut_slack(cut, point);
    if (first || slack < report.worst_slack) {
      report.worst = point;
      report.worst_slack = slack;
      first = false;
    }
  }
  report.valid = !first && report.worst_slack >= 0;
  return report;
}

ValidityReport certify_valid(const Instance& instance, const MixingCut& cut,
                             int cap) {
  return certify_valid(instance, cut, enumerate_hull_points(instance, cap));
}

namespace {

// Incremental fraction-free row reduction over rational rows; stops adding
// once the target rank is reached.
class RankAccumulator {
 public:
  explicit RankAccumulator(int width) : width_(width) {}

  bool add(RatVector row) {
    for (const auto& pivot : rows_) {
      const Rat& lead = row[pivot.first];
      if (lead == 0) continue;
      Rat factor = lead / pivot.second[pivot.first];
      for (int c = pivot.first; c < width_; ++c) {
        if (pivot.second[c] != 0) row[c] -= factor * pivot.second[c];
      }
    }
    for (int c = 0; c < width_; ++c) {
      if (row[c] != 0) {
        rows_.emplace_back(c, std::move(row));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int width_;
  std::vector<std::pair<int, RatVector>> rows_;
};

}  // namespace

FacetReport certify_facet(const Instance& instance, const MixingCut& cut,
                          const std::vector<HullPoint>& points) {
  const int n = instance.n();
  FacetReport report;
  RankAccumulator rank(n + 2);
  for (const HullPoint& point : points) {
    if (cut_slack(cut, point) != 0) continue;
    report.tight_points.push_back(point);
    if (rank.rank() <= n) {
      RatVector row(n + 2, Rat(0));
      row[0] = 1;
      row[1] = point.y;
      for (int j = 0; j < n; ++j)
        if (point.mask & (1u << j)) row[2 + j] = 1;
      rank.add(std::move(row));
    }
  }
  report.rank = rank.rank();
  report.is_facet = (report.rank == n + 1);
  return report;
}

FacetReport certify_facet(const Instance& instance, const MixingCut& cut,
                          int cap) {
  return certify_facet(instance, cut, enumerate_hull_points(instance, cap));
}

int affine_rank(const std::vector<std::pair<Rat, std::vector<char>>>& points) {
  if (points.empty()) return 0;
  const int n = static_cast<int>(points.front().second.size());
  RankAccumulator rank(n + 2);
  for (const auto& [y, z] : points) {
    RatVector row(n + 2, Rat(0));
    row[0] = 1;
    row[1] = y;
    for (int j = 0; j < n; ++j)
      if (z[j]) row[2 + j] = 1;
    rank.add(std::move(row));
  }
  return rank.rank();
}

std::vector<InsidePoint> sample_inside(const Instance& instance,
                                       std::uint64_t seed, int count, int cap) {
  std::vector<HullPoint> points = enumerate_hull_points(instance, cap);
  SplitMix64 rng(seed);
  const int n = instance.n();
  std::vector<InsidePoint> samples;
  samples.reserve(count);
  for (int s = 0; s < count; ++s) {
    int terms = 2 + static_cast<int>(rng.below(3));
    RatVector weights;
    Rat total = 0;
    std::vector<const HullPoint*> chosen;
    for (int t = 0; t < terms; ++t) {
      chosen.push_back(&points[rng.below(points.size())]);
      Rat w(1 + static_cast<long>(rng.below(9)));
      total += w;
      weights.push_back(std::move(w));
    }
    InsidePoint sample;
    sample.y = 0;
    sample.z.assign(n, Rat(0));
    for (int t = 0; t < terms; ++t) {
      Rat lambda = weights[t] / total;
      sample.y += lambda * chosen[t]->y;
      for (int j = 0; j < n; ++j) {
        if (chosen[t]->mask & (1u << j)) sample.z[j] += lambda;
      }
    }
    // Push along the recession direction (1, 0) half the time.
    sample.y += Rat(static_cast<long>(rng.below(3)), 2);
    samples.push_back(std::move(sample));
  }
  return samples;
}

}  // namespace mixknap
