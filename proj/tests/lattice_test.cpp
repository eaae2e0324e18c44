#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mhpp/errors.hpp"
#include "mhpp/lattice.hpp"
#include "mhpp/parallel.hpp"
#include "test_util.hpp"

using namespace mhpp;
using mhpp::testing::pts;

TEST(LatticePoint, Norm1) {
  EXPECT_EQ(norm1(LatticePoint{0, 0}), 0);
  EXPECT_EQ(norm1(LatticePoint{2, -1, 0}), 3);
  EXPECT_EQ(norm1(LatticePoint{1, 1, 1, 1}), 4);
}

TEST(LatticePoint, Arithmetic) {
  LatticePoint a{1, 2};
  EXPECT_EQ((a + LatticePoint{1, -1}), (LatticePoint{2, 1}));
  EXPECT_EQ(-a, (LatticePoint{-1, -2}));
  EXPECT_EQ(distance1(a, LatticePoint{0, 0}), 3);
  EXPECT_LT((LatticePoint{0, 5}), (LatticePoint{1, 0}));
}

TEST(StepsToward, Examples) {
  EXPECT_EQ(steps_toward({0, 0}, {1, 1}), (std::vector<LatticePoint>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(steps_toward({0, 0}, {0, 0}).empty());
  EXPECT_EQ(steps_toward({2, 0}, {0, 0}), (std::vector<LatticePoint>{{-1, 0}}));
  EXPECT_THROW(steps_toward({0}, {0, 0}), InputError);
}

TEST(PointSet, RejectsMixedDimensions) {
  PointSet s(2);
  EXPECT_THROW(s.insert(LatticePoint{1}), InputError);
  EXPECT_THROW(PointSet(std::vector<LatticePoint>{}), InputError);
}

TEST(JumpSystem, Examples) {
  EXPECT_TRUE(is_jump_system(pts({{1, 0}, {0, 1}})).verdict);
  EXPECT_TRUE(is_jump_system(pts({{0, 0}, {1, 1}})).verdict);
  const auto r = is_jump_system(pts({{0, 0}, {2, 2}}));
  ASSERT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness->point("alpha"), (LatticePoint{0, 0}));
  EXPECT_EQ(*r.witness->point("s"), (LatticePoint{1, 0}));
  for (const auto& c : r.witness->candidates) EXPECT_FALSE(c.in_support);
}

TEST(JumpSystem, WitnessIsRecheckable) {
  const PointSet s = pts({{0, 0}, {2, 2}});
  const auto r = is_jump_system(s);
  const auto& w = *r.witness;
  const LatticePoint next = *w.point("alpha") + *w.point("s");
  EXPECT_FALSE(s.contains(next));
  for (const auto& t : steps_toward(next, *w.point("beta"))) EXPECT_FALSE(s.contains(next + t));
}

TEST(J2, Examples) {
  EXPECT_TRUE(check_J2(pts({{0, 0}, {1, 1}})).verdict);
  EXPECT_TRUE(check_J2(pts({{1, 0}, {0, 1}})).verdict);
  const PointSet s = pts({{0, 0}, {1, 1}, {2, 0}});
  EXPECT_EQ(check_J2(s).verdict, is_jump_system(s).verdict);
}

TEST(JNatural, Examples) {
  EXPECT_TRUE(check_J_natural(pts({{0}, {1}, {2}})).verdict);
  EXPECT_TRUE(check_J_natural(pts({{0}, {2}})).verdict);
  EXPECT_TRUE(check_J_natural(pts({{0, 0}, {1, 1}})).verdict);
}

TEST(Parity, Examples) {
  EXPECT_TRUE(is_constant_parity(pts({{1, 0}, {0, 1}})));
  EXPECT_TRUE(is_constant_sum(pts({{1, 0}, {0, 1}})));
  EXPECT_TRUE(is_constant_parity(pts({{0, 0}, {1, 1}})));
  EXPECT_FALSE(is_constant_sum(pts({{0, 0}, {1, 1}})));
  EXPECT_FALSE(is_constant_parity(pts({{0, 0}, {1, 0}})));
}

TEST(DeltaMatroid, Examples) {
  EXPECT_TRUE(is_delta_matroid(pts({{0, 0}, {1, 1}})).verdict);
  EXPECT_FALSE(is_delta_matroid(pts({{0, 0}, {2, 0}})).verdict);
  EXPECT_TRUE(is_delta_matroid(pts({{0, 0}, {1, 1}, {1, 0}})).verdict);
}

TEST(MatroidBasis, Examples) {
  EXPECT_TRUE(is_matroid_basis_set(pts({{1, 0}, {0, 1}})).verdict);
  const auto r = is_matroid_basis_set(pts({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  ASSERT_FALSE(r.verdict);
  EXPECT_EQ(r.witness->rule, "basis-exchange");
  // Re-check: i in A \ B and no j in B \ A gives a basis A - e_i + e_j.
  const PointSet s = pts({{1, 1, 0, 0}, {0, 0, 1, 1}});
  const LatticePoint a = *r.witness->point("A");
  const LatticePoint b = *r.witness->point("B");
  const LatticePoint ei = *r.witness->point("i");
  const LatticePoint removed = a - ei;
  EXPECT_EQ(removed.coords().end() - std::find(removed.coords().begin(), removed.coords().end(), -1), 0);
  for (std::size_t j = 0; j < 4; ++j) {
    if (b[j] == 1 && a[j] == 0) EXPECT_FALSE(s.contains(removed + LatticePoint::unit(4, j)));
  }
}

TEST(MatroidBasis, UniformMatroid) {
  PointSet u(4);
  for (const auto& p : simplex_points(4, 2)) {
    if (is_binary(PointSet(4, {p}))) u.insert(p);
  }
  EXPECT_EQ(u.size(), 6u);
  EXPECT_TRUE(is_matroid_basis_set(u).verdict);
  EXPECT_TRUE(is_jump_system(u).verdict);
  EXPECT_TRUE(is_constant_sum(u));
}

TEST(Project, Examples) {
  // Coordinates are 0-based.
  EXPECT_EQ(project(pts({{0, 2}, {2, 0}}), 1), pts({{0}, {2}}));
  EXPECT_EQ(project(pts({{1, 0}, {0, 1}}), 0), pts({{0}, {1}}));
  EXPECT_EQ(project(pts({{1, 1}}), 1), pts({{1}}));
}

TEST(Polarize, Examples) {
  EXPECT_EQ(polarize_set(pts({{0}, {2}})), pts({{0, 0}, {1, 1}}));
  EXPECT_EQ(polarize_set(pts({{1}})), pts({{1}}));
  EXPECT_EQ(polarize_set(pts({{1, 0}, {0, 1}})), pts({{1, 0}, {0, 1}}));
  EXPECT_EQ(polarize_set(pts({{0}, {1}})), pts({{0}, {1}}));
  EXPECT_EQ(polarize_set(pts({{0, 0}, {2, 1}})).size(), 2u);
}

TEST(SlotLayout, CollapseInvertsLift) {
  SlotLayout layout({2, 1, 3});
  EXPECT_EQ(layout.slots(), 6u);
  for (const auto& a : mhpp::testing::box(3, 1)) {
    for (const auto& s : layout.lift(a)) EXPECT_EQ(layout.collapse(s), a);
  }
  EXPECT_EQ(layout.lift({2, 1, 2}).size(), 3u);
}

TEST(Homogenize, Examples) {
  EXPECT_EQ(homogenize_set(pts({{0}, {1}, {2}}), 2), pts({{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(homogenize_set(pts({{1, 0}, {0, 1}}), 1), pts({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(homogenize_set(pts({{0, 0}}), 3), pts({{0, 0, 3}}));
}

TEST(Simplex, Counts) {
  EXPECT_EQ(simplex_points(3, 2).size(), 6u);
  EXPECT_EQ(simplex_points(7, 3).size(), 84u);
  EXPECT_EQ(simplex_points(2, 0).size(), 1u);
}

class LatticeProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{12345};
};

TEST_F(LatticeProperty, J1MatchesOracle) {
  const auto universe = mhpp::testing::box(3, 2);
  for (int k = 0; k < 300; ++k) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 3, 6);
    EXPECT_EQ(is_jump_system(s).verdict, mhpp::testing::oracle_jump_system(s)) << s;
  }
}

TEST_F(LatticeProperty, J1EquivalentToJ2OnConstantParity) {
  const auto universe = mhpp::testing::box(4, 3);
  int tested = 0;
  while (tested < 200) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 4, 5);
    if (!is_constant_parity(s)) continue;
    ++tested;
    EXPECT_EQ(is_jump_system(s).verdict, check_J2(s).verdict) << s;
  }
}

TEST_F(LatticeProperty, PolarizationPreservesJumpSystems) {
  const auto universe = mhpp::testing::box(3, 3);
  for (int k = 0; k < 150; ++k) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 3, 5);
    const PointSet p = polarize_set(s);
    EXPECT_TRUE(is_binary(p));
    EXPECT_EQ(is_jump_system(s).verdict, is_delta_matroid(p).verdict) << s;
  }
}

TEST_F(LatticeProperty, ProjectionsOfConstantSumJumpSystems) {
  const auto universe = mhpp::testing::box(3, 2);
  int tested = 0;
  for (int k = 0; k < 3000 && tested < 60; ++k) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 3, 5);
    if (!is_constant_sum(s) || !is_jump_system(s).verdict) continue;
    ++tested;
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(check_J_natural(project(s, j)).verdict) << s;
  }
  EXPECT_GT(tested, 10);
}

TEST_F(LatticeProperty, HomogenizationIsConstantSum) {
  const auto universe = mhpp::testing::box(2, 3);
  for (int k = 0; k < 50; ++k) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 2, 5);
    EXPECT_TRUE(is_constant_sum(homogenize_set(s, 6)));
  }
}

TEST_F(LatticeProperty, ThreadCountDoesNotChangeWitness) {
  const auto universe = mhpp::testing::box(3, 2);
  for (int k = 0; k < 40; ++k) {
    const PointSet s = mhpp::testing::random_subset(rng, universe, 3, 8);
    set_thread_count(1);
    const auto a = is_jump_system(s);
    set_thread_count(4);
    const auto b = is_jump_system(s);
    set_thread_count(1);
    ASSERT_EQ(a.verdict, b.verdict);
    if (a.witness) {
      EXPECT_EQ(a.witness->points, b.witness->points);
    }
  }
}
