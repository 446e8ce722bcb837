#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "latcount/error.hpp"

using namespace latcount;
using namespace latcount::testing;

TEST(EnumerateLatticePoints, UnitSquare) {
  Polyhedron sq{2, {{vec({-1, 0}), 0}, {vec({0, -1}), 0}, {vec({1, 0}), 1}, {vec({0, 1}), 1}}, {}};
  EXPECT_EQ(enumerate_lattice_points(sq),
            (std::vector<IntVec>{ivec({0, 0}), ivec({0, 1}), ivec({1, 0}), ivec({1, 1})}));
}

TEST(EnumerateLatticePoints, RunningExampleFibers) {
  const ParametricPolytope p = running_example();
  EXPECT_EQ(enumerate_lattice_points(p.fiber(vec({3, 4}))),
            (std::vector<IntVec>{ivec({0, 1}), ivec({0, 2}), ivec({1, 2}), ivec({1, 3}),
                                 ivec({2, 3}), ivec({3, 4})}));
  EXPECT_EQ(enumerate_lattice_points(p.fiber(vec({2, 2}))).size(), 4u);
  EXPECT_EQ(count_bruteforce(p, ivec({3, 4})), 6);
}

TEST(EnumerateLatticePoints, Unbounded) {
  EXPECT_THROW(enumerate_lattice_points(Polyhedron{1, {{vec({-1}), 0}}, {}}), PreconditionError);
}

TEST(CountBruteforce, AgreesWithScan) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    ParametricPolytope p = random_polytope(rng, 1, 2);
    for (long s = -5; s <= 5; ++s) {
      // Coefficients up to 5 keep vertices well inside this box for small s.
      auto bb = bounding_box(p.fiber(vec({s})));
      if (!bb) continue;
      long lo = -60, hi = 60;
      if (bb->first[0] < lo || bb->first[1] < lo || bb->second[0] > hi || bb->second[1] > hi)
        continue;
      EXPECT_EQ(count_bruteforce(p, ivec({s})), scan_count(p, ivec({s}), lo, hi));
    }
  }
}

TEST(SeriesCoefficient, Examples) {
  RatGenFun even{1, {GFTerm{1, ivec({0}), {ivec({2})}}}};
  EXPECT_EQ(series_coefficient(even, ivec({-1}), ivec({4})), 1);
  EXPECT_EQ(series_coefficient(even, ivec({-1}), ivec({3})), 0);
  RatGenFun twos_fives{1, {GFTerm{1, ivec({0}), {ivec({2}), ivec({5})}}}};
  EXPECT_EQ(series_coefficient(twos_fives, ivec({-1}), ivec({10})), 2);
  RatGenFun mono{1, {GFTerm{1, ivec({7}), {}}}};
  EXPECT_EQ(series_coefficient(mono, ivec({1}), ivec({7})), 1);
  EXPECT_EQ(series_coefficient(mono, ivec({1}), ivec({6})), 0);
}

TEST(SeriesCoefficient, FlippedExpansion) {
  RatGenFun geo{1, {GFTerm{1, ivec({0}), {ivec({1})}}}};
  for (long s = -6; s <= 6; ++s) {
    EXPECT_EQ(series_coefficient(geo, ivec({-1}), ivec({s})), s >= 0 ? 1 : 0);
    EXPECT_EQ(series_coefficient(geo, ivec({1}), ivec({s})), s <= -1 ? -1 : 0);
  }
}

TEST(SeriesCoefficient, OrthogonalDirection) {
  RatGenFun f{2, {GFTerm{1, ivec({0, 0}), {ivec({1, -1})}}}};
  EXPECT_THROW(series_coefficient(f, ivec({1, 1}), ivec({0, 0})), PreconditionError);
}

TEST(CountProjection, NoProjection) {
  Polyhedron fiber = running_example().fiber(vec({3, 4}));
  EXPECT_EQ(count_projection_bruteforce(fiber, 2, {}), 6);
}

TEST(CountProjection, EvenNumbers) {
  // (t, u) with t = 2u, 0 <= u <= 3.
  Polyhedron p{2, {{vec({0, -1}), 0}, {vec({0, 1}), 3}}, {{vec({1, -2}), 0}}};
  EXPECT_EQ(count_projection_bruteforce(p, 1, {}), 4);
}

TEST(CountProjection, RunningExampleToFirstCoordinate) {
  // (s1, s2, t1, t2) space with s fixed by the caller.
  Polyhedron lifted = running_example().lifted();
  EXPECT_EQ(count_projection_bruteforce(lifted, 1, ivec({3, 4})), 4);
}

TEST(CountProjection, UnboundedFiber) {
  Polyhedron p{2, {{vec({0, -1}), 0}}, {}};
  EXPECT_THROW(count_projection_bruteforce(p, 1, {}), PreconditionError);
}
