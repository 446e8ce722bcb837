#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "latcount/error.hpp"
#include "latcount/linalg.hpp"

using namespace latcount;
using namespace latcount::testing;

namespace {

IntMat imat(std::initializer_list<std::initializer_list<long>> rows) {
  return to_int(mat(rows));
}

IntMat product(const IntMat& a, const IntMat& b) {
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool same(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMat rows_of(const std::vector<IntVec>& vs) {
  IntMat m(vs.size(), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
  return m;
}

// Lower-triangular convention of hermite_normal_form.
void expect_hnf_shape(const IntMat& h) {
  long prev = -1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    long last = -1;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) last = static_cast<long>(j);
    if (last < 0) {
      EXPECT_EQ(prev, -1) << "zero row after a nonzero row";
      continue;
    }
    EXPECT_GT(last, prev);
    EXPECT_GT(h(i, last), 0);
    for (std::size_t k = i + 1; k < h.rows(); ++k) {
      EXPECT_GE(h(k, last), 0);
      EXPECT_LT(h(k, last), h(i, last));
    }
    prev = last;
  }
}

}  // namespace

TEST(Rational, ArithmeticRoundTrips) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-(1L << 62), 1L << 62);
  for (int i = 0; i < 200; ++i) {
    Rat a = make_rat(Int(std::to_string(dist(rng))), Int(std::to_string(dist(rng) | 1)));
    Rat b = make_rat(Int(std::to_string(dist(rng))), Int(std::to_string(dist(rng) | 1)));
    EXPECT_EQ(Rat(a + b - b), a);
    if (b != 0) {
      EXPECT_EQ(Rat(a * b / b), a);
    }
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-6/4"), make_rat(-3, 2));
  EXPECT_EQ(to_string(make_rat(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rat(7)), "7");
  EXPECT_THROW(parse_rat("1/0"), InputError);
  EXPECT_THROW(parse_rat("x"), InputError);
  EXPECT_EQ(floor_of(make_rat(-5, 2)), -3);
  EXPECT_EQ(ceil_of(make_rat(-5, 2)), -2);
}

TEST(SolveRationalSystem, Identity) {
  auto sol = solve_rational_system(mat({{1, 0}, {0, 1}}), vec({3, 4}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->particular, vec({3, 4}));
  EXPECT_TRUE(sol->nullspace.empty());
}

TEST(SolveRationalSystem, Inconsistent) {
  EXPECT_FALSE(solve_rational_system(mat({{1, 1}, {2, 2}}), vec({1, 3})));
}

TEST(SolveRationalSystem, BackSubstitution) {
  RatMat a = mat({{1, 2}, {3, 4}});
  auto sol = solve_rational_system(a, vec({5, 6}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * sol->particular, vec({5, 6}));
}

TEST(SolveRationalSystem, NullspaceSpans) {
  RatMat a = mat({{1, 2, 3, 4}, {2, 4, 6, 9}});
  auto sol = solve_rational_system(a, vec({1, 2}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * sol->particular, vec({1, 2}));
  EXPECT_EQ(sol->nullspace.size(), 4 - rank(a));
  for (const auto& v : sol->nullspace) EXPECT_TRUE(is_zero(a * v));
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(mat({{1, 2}, {3, 4}})), -2);
  EXPECT_EQ(determinant(imat({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})), 0);
  EXPECT_EQ(determinant(imat({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}})), 6);
  EXPECT_EQ(determinant(mat({{1, 2}, {2, 4}})), 0);
  auto inv = inverse(mat({{2, 1}, {1, 1}}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * vec({1, 0}), vec({1, -1}));
}

TEST(HermiteNormalForm, Identity) {
  IntMat id = IntMat::identity(3);
  HermiteForm f = hermite_normal_form(id);
  EXPECT_TRUE(same(f.h, id));
  EXPECT_TRUE(same(f.u, id));
}

TEST(HermiteNormalForm, RowSwap) {
  HermiteForm f = hermite_normal_form(imat({{0, 1}, {1, 0}}));
  EXPECT_TRUE(same(f.h, IntMat::identity(2)));
  EXPECT_TRUE(same(f.u, imat({{0, 1}, {1, 0}})));
}

TEST(HermiteNormalForm, TwoByTwo) {
  IntMat a = imat({{2, 4}, {1, 3}});
  HermiteForm f = hermite_normal_form(a);
  EXPECT_TRUE(same(f.h, product(f.u, a)));
  EXPECT_EQ(abs(determinant(f.u)), 1);
  expect_hnf_shape(f.h);
}

TEST(HermiteNormalForm, RandomFourByFour) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    IntMat a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = coef(rng);
    HermiteForm f = hermite_normal_form(a);
    EXPECT_TRUE(same(f.h, product(f.u, a)));
    EXPECT_EQ(abs(determinant(f.u)), 1);
    expect_hnf_shape(f.h);
  }
}

TEST(HermiteNormalForm, RankDeficient) {
  IntMat a = imat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  HermiteForm f = hermite_normal_form(a);
  EXPECT_TRUE(same(f.h, product(f.u, a)));
  expect_hnf_shape(f.h);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f.h(0, j), 0);
}

TEST(ColumnHermite, ProductAndRank) {
  IntMat a = imat({{1, 2, 1, 0}, {1, 1, 0, 1}});
  ColumnHermite f = column_hermite_form(a);
  EXPECT_EQ(f.rank, 2u);
  EXPECT_TRUE(same(f.h, product(a, f.v)));
  EXPECT_EQ(abs(determinant(f.v)), 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < 4; ++j) EXPECT_EQ(f.h(i, j), 0);
}

TEST(Lll, AlreadyReduced) {
  std::vector<IntVec> b = {ivec({1, 0}), ivec({0, 1})};
  EXPECT_EQ(lll_reduce(b), b);
}

TEST(Lll, Shear) {
  auto r = lll_reduce({ivec({1, 0}), ivec({99, 1})});
  EXPECT_TRUE(same(hermite_normal_form(rows_of(r)).h, IntMat::identity(2)));
  for (const auto& v : r) EXPECT_EQ(dot(v, v), 1);
}

TEST(Lll, SingleVector) {
  std::vector<IntVec> b = {ivec({201, 37})};
  EXPECT_EQ(lll_reduce(b), b);
}

TEST(Lll, DependentInput) {
  EXPECT_THROW(lll_reduce({ivec({1, 2}), ivec({2, 4})}), PreconditionError);
}

TEST(Lll, RandomBasesKeepLatticeAndLovasz) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-30, 30);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntVec> b(3, IntVec(3));
    for (auto& v : b)
      for (auto& x : v) x = coef(rng);
    if (determinant(rows_of(b)) == 0) continue;
    auto r = lll_reduce(b);
    EXPECT_TRUE(same(hermite_normal_form(rows_of(r)).h, hermite_normal_form(rows_of(b)).h));
    // Gram-Schmidt checks.
    std::vector<RatVec> gs;
    std::vector<std::vector<Rat>> mu(3, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      RatVec v = to_rat(r[i]);
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(to_rat(r[i]), gs[j]) / dot(gs[j], gs[j]);
        v = v - scaled(gs[j], mu[i][j]);
      }
      gs.push_back(v);
    }
    for (std::size_t i = 1; i < 3; ++i) {
      for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(mu[i][j]), make_rat(1, 2));
      Rat lhs = dot(gs[i], gs[i]);
      Rat rhs = (make_rat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * dot(gs[i - 1], gs[i - 1]);
      EXPECT_GE(lhs, rhs);
    }
  }
}
