#include "doctest.h"
#include "mixknap/error.hpp"
#include "mixknap/generator.hpp"
#include "mixknap/instance.hpp"

using namespace mixknap;

TEST_CASE("canonicalize sorts by h nonincreasing and derives nu, s") {
  Instance inst = Instance::canonicalize({4, 10, 7, 2}, {2, 3, 2, 1}, 5);
  CHECK(inst.n() == 4);
  CHECK(inst.h_vec() == RatVector{10, 7, 4, 2});
  CHECK(inst.a_vec() == RatVector{3, 2, 2, 1});
  CHECK(inst.nu() == 2);
  CHECK(inst.s(0) == 0);
  CHECK(inst.s(1) == 3);
  CHECK(inst.s(2) == 5);
  CHECK(inst.s(3) == 7);
  CHECK(inst.s(4) == 8);
  // Permutation map points back at the original positions.
  CHECK(inst.original_index(0) == 1);
  CHECK(inst.original_index(1) == 2);
  CHECK(inst.original_index(2) == 0);
  CHECK(inst.original_index(3) == 3);
}

TEST_CASE("derived tail value") {
  Instance inst = Instance::canonicalize({5, 3, 1}, {1, 1, 1}, 1);
  CHECK(inst.nu() == 1);
  CHECK(inst.h_tail() == 3);
}

TEST_CASE("canonicalize rejects bad data") {
  CHECK_THROWS_AS(Instance::canonicalize({1, 1}, {3, 3}, 2), RejectsInstance);
  CHECK_THROWS_AS(Instance::canonicalize({1, 1}, {1, 1}, 3), RejectsInstance);
  CHECK_THROWS_AS(Instance::canonicalize({1, -1}, {1, 1}, 1), RejectsInstance);
  CHECK_THROWS_AS(Instance::canonicalize({1}, {1}, Rat(1, 2)), RejectsInstance);
}

TEST_CASE("stable sort keeps input order among equal values") {
  Instance inst = Instance::canonicalize({7, 9, 7, 7}, {1, 2, 3, 4}, 9);
  CHECK(inst.h_vec() == RatVector{9, 7, 7, 7});
  CHECK(inst.a_vec() == RatVector{2, 1, 3, 4});
}

TEST_CASE("zero-weight columns are admitted and optionally dropped") {
  Instance keep = Instance::canonicalize({5, 4, 3}, {0, 2, 1}, 2);
  CHECK(keep.n() == 3);
  Instance drop = Instance::canonicalize({5, 4, 3}, {0, 2, 1}, 2, true);
  CHECK(drop.n() == 2);
  CHECK(drop.h_vec() == RatVector{4, 3});
}

TEST_CASE("chance constraint mapping drops forced-zero scenarios") {
  ScenarioSource src;
  src.xi = {8, 6, 5, 3, 1};
  src.pi = {Rat(1, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)};
  src.epsilon = Rat(3, 5);
  Instance inst = from_chance_constraint(src);
  CHECK(inst.n() == 5);
  CHECK(inst.p() == Rat(3, 5));
  CHECK(inst.nu() == 3);
  for (int j = 0; j < 5; ++j) CHECK(inst.a(j) == Rat(1, 5));
}

TEST_CASE("chance constraint can leave too few scenarios") {
  ScenarioSource src;
  src.xi = {9, 1};
  src.pi = {Rat(7, 10), Rat(3, 10)};
  src.epsilon = Rat(1, 2);
  CHECK_THROWS_AS(from_chance_constraint(src), RejectsInstance);
}

TEST_CASE("equal realizations survive the mapping") {
  ScenarioSource src;
  src.xi = {4, 4, 4};
  src.pi = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  src.epsilon = Rat(1, 3);
  Instance inst = from_chance_constraint(src);
  CHECK(inst.nu() == 1);
  for (int j = 0; j < 3; ++j) CHECK(inst.h(j) == 4);
}

TEST_CASE("scenario source validation") {
  ScenarioSource src;
  src.xi = {1, 2};
  src.pi = {Rat(1, 2), Rat(1, 3)};
  src.epsilon = Rat(1, 2);
  CHECK_THROWS_AS(src.validate(), RejectsInstance);  // probabilities sum != 1
  src.pi = {Rat(1, 2), Rat(1, 2)};
  src.epsilon = 1;
  CHECK_THROWS_AS(src.validate(), RejectsInstance);  // epsilon outside (0,1)
}

TEST_CASE("derived invariants hold on generated instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenerateOptions options;
    options.n = 3 + static_cast<int>(seed % 8);
    options.seed = seed;
    Instance inst = generate_instance(options);
    CHECK(inst.s(inst.nu()) <= inst.p());
    CHECK(inst.s(inst.nu() + 1) > inst.p());
    for (int j = 1; j < inst.n(); ++j) CHECK(inst.h(j - 1) >= inst.h(j));
    for (int j = 0; j < inst.n(); ++j) CHECK(inst.a(j) <= inst.p());
    CHECK(inst.s(inst.n()) > inst.p());
  }
}

TEST_CASE("generation is deterministic per seed") {
  GenerateOptions options;
  options.n = 7;
  options.seed = 42;
  Instance a = generate_instance(options);
  Instance b = generate_instance(options);
  CHECK(a.h_vec() == b.h_vec());
  CHECK(a.a_vec() == b.a_vec());
  CHECK(a.p() == b.p());
}
