#include <gtest/gtest.h>

#include <algorithm>

#include <random>

#include "fixtures.hpp"
#include "latcount/error.hpp"
#include "latcount/genfun.hpp"

using namespace latcount;
using namespace latcount::testing;

namespace {

GFTerm term1(long coeff, long num, std::vector<long> denoms) {
  GFTerm t{coeff, ivec({num}), {}};
  for (long b : denoms) t.denoms.push_back(ivec({b}));
  return t;
}

RatGenFun single(const GFTerm& t) { return RatGenFun{t.num.size(), {t}}; }

}  // namespace

TEST(FlipDenominator, GeometricSeries) {
  GFTerm f = flip_denominator(term1(1, 0, {1}), 0);
  EXPECT_EQ(f, term1(-1, -1, {-1}));
}

TEST(FlipDenominator, Involution) {
  GFTerm t{3, ivec({2, -1}), {ivec({0, 1}), ivec({1, 2})}};
  for (std::size_t j = 0; j < 2; ++j) {
    GFTerm once = flip_denominator(t, j);
    IntVec neg = t.denoms[j];
    for (auto& x : neg) x = -x;
    auto it = std::find(once.denoms.begin(), once.denoms.end(), neg);
    ASSERT_NE(it, once.denoms.end());
    EXPECT_EQ(flip_denominator(once, static_cast<std::size_t>(it - once.denoms.begin())), t);
  }
}

TEST(FlipDenominator, PreservesValue) {
  EXPECT_EQ(evaluate(single(term1(1, 0, {1})), vec({2})),
            evaluate(single(flip_denominator(term1(1, 0, {1}), 0)), vec({2})));
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> e(-3, 3), num(2, 9), den(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    GFTerm t{make_rat(e(rng), den(rng)), ivec({e(rng), e(rng)}), {}};
    while (t.denoms.size() < 2) {
      IntVec b = ivec({e(rng), e(rng)});
      if (!is_zero(b)) t.denoms.push_back(b);
    }
    for (int k = 0; k < 10; ++k) {
      RatVec x{make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))};
      bool pole = false;
      for (const auto& b : t.denoms) {
        Rat m = 1;
        for (std::size_t i = 0; i < 2; ++i) {
          Rat p = 1;
          for (long j = 0; j < std::abs(b[i].get_si()); ++j) p *= x[i];
          m *= b[i] >= 0 ? p : 1 / p;
        }
        pole = pole || m == 1;
      }
      if (pole) continue;
      Rat v = evaluate(single(t), x);
      EXPECT_EQ(evaluate(single(flip_denominator(t, 0)), x), v);
      EXPECT_EQ(evaluate(single(flip_denominator(t, 1)), x), v);
    }
  }
}

TEST(OrientToL, Examples) {
  RatGenFun f = single(term1(1, 0, {2}));
  EXPECT_EQ(orient_to_l(f, ivec({-1})), f);
  EXPECT_EQ(orient_to_l(f, ivec({1})), single(term1(-1, -2, {-2})));
  RatGenFun g = single(term1(1, 0, {2, 5}));
  EXPECT_EQ(orient_to_l(g, ivec({-1})), g);
}

TEST(OrientToL, OrthogonalDirection) {
  RatGenFun f{2, {GFTerm{1, ivec({0, 0}), {ivec({1, 0}), ivec({1, -1})}}}};
  try {
    orient_to_l(f, ivec({1, 1}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("term 0"), std::string::npos) << e.what();
  }
}

TEST(Validate, RejectsBadInput) {
  EXPECT_THROW(validate(single(term1(1, 0, {0}))), InputError);
  RatGenFun mixed{2, {GFTerm{1, ivec({0}), {}}}};
  EXPECT_THROW(validate(mixed), InputError);
}

TEST(Normalize, MergesAndDropsZeros) {
  RatGenFun f{1, {term1(1, 3, {2, 1}), term1(2, 3, {1, 2}), term1(0, 1, {1})}};
  f.normalize();
  ASSERT_EQ(f.terms.size(), 1u);
  EXPECT_EQ(f.terms[0].coeff, 3);
  EXPECT_EQ(f.terms[0].denoms, (std::vector<IntVec>{ivec({1}), ivec({2})}));
  EXPECT_EQ(f.k_bound(), 2u);
}

TEST(Instantiate, RunningExampleV5) {
  // x^(0, -s1 + s2) / ((1 - x^(0,1)) (1 - x^(1,1)))
  ParamGenFun f{2, 2, {}};
  f.terms.push_back({StepPoly::constant(2, 1),
                     {StepPoly(2), StepPoly::affine(vec({-1, 1}), 0)},
                     {ivec({0, 1}), ivec({1, 1})}});
  RatGenFun g = instantiate(f, ivec({3, 4}));
  EXPECT_EQ(g, (RatGenFun{2, {GFTerm{1, ivec({0, 1}), {ivec({0, 1}), ivec({1, 1})}}}}));
}

TEST(Instantiate, RunningExampleV1FloorExponent) {
  StepPoly fl = StepPoly::floor_of(RatVec{make_rat(1, 2), -1}, 0);
  ParamGenFun f{2, 2, {}};
  f.terms.push_back({StepPoly::constant(2, 1),
                     {fl * Rat(-2) + StepPoly::affine(vec({1, -2}), 0), -fl},
                     {ivec({1, 0}), ivec({2, 1})}});
  RatGenFun g = instantiate(f, ivec({3, 4}));
  ASSERT_EQ(g.terms.size(), 1u);
  EXPECT_EQ(g.terms[0].num, ivec({1, 3}));
}

TEST(Instantiate, ConstantPassesThrough) {
  RatGenFun c{1, {term1(5, 2, {1, 3})}};
  EXPECT_EQ(instantiate(to_param(c), {}), c);
  EXPECT_EQ(from_param(to_param(c)), c);
}

TEST(Instantiate, NonIntegralExponent) {
  ParamGenFun f{1, 1, {}};
  f.terms.push_back({StepPoly::constant(1, 1), {StepPoly::affine(RatVec{make_rat(1, 2)}, 0)}, {}});
  EXPECT_THROW(instantiate(f, ivec({3})), PreconditionError);
}
