#pragma once

#include <functional>
#include <random>

#include "latcount/convert.hpp"
#include "latcount/linalg.hpp"
#include "latcount/oracle.hpp"
#include "latcount/parametric.hpp"

namespace latcount::testing {

inline RatMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVec> r;
  for (const auto& row : rows) {
    RatVec v;
    for (long x : row) v.push_back(x);
    r.push_back(std::move(v));
  }
  return RatMat::from_rows(r, r.empty() ? 0 : r.front().size());
}

inline RatVec vec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(x);
  return v;
}

inline IntVec ivec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(x);
  return v;
}

/// t1 - 2 t2 >= s1 - 2 s2, -t1 + t2 >= -s1 + s2, t >= 0.
inline ParametricPolytope running_example() {
  return ParametricPolytope::from_matrices(mat({{1, -2}, {-1, 1}, {0, 0}, {0, 0}}),
                                           mat({{-1, 2}, {1, -1}, {-1, 0}, {0, -1}}),
                                           vec({0, 0, 0, 0}));
}

/// s * [0, 1/2]^2: 0 <= t_i, 2 t_i <= s.
inline ParametricPolytope dilated_square() {
  return ParametricPolytope::from_matrices(mat({{0}, {0}, {-1}, {-1}}),
                                           mat({{-1, 0}, {0, -1}, {2, 0}, {0, 2}}),
                                           vec({0, 0, 0, 0}));
}

/// Direct scan of P_s over the box [lo, hi]^d; no LP involved.
inline long scan_count(const ParametricPolytope& p, const IntVec& s, long lo, long hi) {
  const std::size_t d = p.d;
  std::vector<long> t(d, lo);
  long count = 0;
  auto holds = [&](const ParamConstraint& r, bool eq) {
    Rat v = 0;
    for (std::size_t i = 0; i < p.n; ++i) v += r.a[i] * s[i];
    for (std::size_t i = 0; i < d; ++i) v += r.b[i] * t[i];
    return eq ? v == r.c : v <= r.c;
  };
  for (;;) {
    bool in = true;
    for (const auto& r : p.ineqs) in = in && holds(r, false);
    for (const auto& r : p.eqs) in = in && holds(r, true);
    if (in) ++count;
    std::size_t i = d;
    while (i > 0 && t[i - 1] == hi) t[--i] = lo;
    if (i == 0) break;
    ++t[i - 1];
  }
  return count;
}

/// Random parametric polytope with bounded fibers, integer coefficients in
/// [-5, 5] and d + 1 to d + 3 constraints. With `unimodular`, every d x d
/// minor of the t-part lies in {-1, 0, 1}.
inline ParametricPolytope random_polytope(std::mt19937& rng, std::size_t n, std::size_t d,
                                          bool unimodular = false) {
  std::uniform_int_distribution<int> extra(0, 2), coef(-5, 5);
  for (;;) {
    const std::size_t m = d + 1 + extra(rng);
    RatMat a(m, n), b(m, d);
    RatVec c(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = coef(rng);
      for (std::size_t j = 0; j < d; ++j) b(i, j) = coef(rng);
      c[i] = coef(rng);
    }
    if (unimodular) {
      bool ok = true;
      std::vector<std::size_t> rows(d);
      std::function<void(std::size_t, std::size_t)> minors = [&](std::size_t k, std::size_t from) {
        if (!ok) return;
        if (k == d) {
          RatMat sub(d, d);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sub(i, j) = b(rows[i], j);
          Rat det = determinant(sub);
          ok = det >= -1 && det <= 1;
          return;
        }
        for (std::size_t i = from; i < m; ++i) {
          rows[k] = i;
          minors(k + 1, i + 1);
        }
      };
      minors(0, 0);
      if (!ok) continue;
    }
    ParametricPolytope p = ParametricPolytope::from_matrices(a, b, c);
    bool zero_row = false;
    for (const auto& r : p.ineqs) zero_row = zero_row || is_zero(r.b);
    if (zero_row || !p.fibers_bounded()) continue;
    return p;
  }
}

}  // namespace latcount::testing
