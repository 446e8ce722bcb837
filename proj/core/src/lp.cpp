#include "latcount/lp.hpp"

#include <limits>

#include "latcount/error.hpp"

namespace latcount {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Condensed dictionary: basic_i = rhs_i - sum_j T_ij nonbasic_j, objectives
// z = z0 + sum_j c_j nonbasic_j. Variables 0..n-1 are the free x, then one
// slack per constraint, then the artificial.
class Dictionary {
 public:
  std::vector<std::vector<Rat>> t;
  std::vector<Rat> rhs;
  std::vector<std::size_t> basic;
  std::vector<bool> free_row;
  std::vector<std::size_t> nonbasic;
  std::vector<std::vector<Rat>> costs;
  std::vector<Rat> values;

  void pivot(std::size_t r, std::size_t e) {
    const std::size_t cols = nonbasic.size();
    std::vector<Rat>& pr = t[r];
    const Rat inv = 1 / pr[e];
    rhs[r] *= inv;
    for (std::size_t j = 0; j < cols; ++j)
      if (j != e && pr[j] != 0) pr[j] *= inv;
    pr[e] = inv;
    Rat f;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][e] == 0) continue;
      f = t[i][e];
      std::vector<Rat>& pi = t[i];
      rhs[i] -= f * rhs[r];
      for (std::size_t j = 0; j < cols; ++j)
        if (j != e && pr[j] != 0) pi[j] -= f * pr[j];
      pi[e] = -f * pr[e];
    }
    for (std::size_t k = 0; k < costs.size(); ++k) {
      std::vector<Rat>& c = costs[k];
      if (c[e] == 0) continue;
      f = c[e];
      values[k] += f * rhs[r];
      for (std::size_t j = 0; j < cols; ++j)
        if (j != e && pr[j] != 0) c[j] -= f * pr[j];
      c[e] = -f * pr[e];
    }
    std::swap(basic[r], nonbasic[e]);
  }

  void drop_column(std::size_t e) {
    for (auto& row : t) row.erase(row.begin() + static_cast<std::ptrdiff_t>(e));
    for (auto& c : costs) c.erase(c.begin() + static_cast<std::ptrdiff_t>(e));
    nonbasic.erase(nonbasic.begin() + static_cast<std::ptrdiff_t>(e));
  }

  void drop_row(std::size_t r) {
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basic.erase(basic.begin() + static_cast<std::ptrdiff_t>(r));
    free_row.erase(free_row.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Primal simplex with Bland's rule on objective k. False if unbounded.
  bool optimize(std::size_t k) {
    Rat best, ratio;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < nonbasic.size(); ++j)
        if (costs[k][j] > 0 && (enter == kNone || nonbasic[j] < nonbasic[enter])) enter = j;
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (free_row[i] || t[i][enter] <= 0) continue;
        ratio = rhs[i] / t[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basic[i] < basic[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const Polyhedron& p, const RatVec& objective) {
  const std::size_t n = p.dim;
  if (objective.size() != n) throw InputError("lp: objective has wrong dimension");
  const std::size_t ni = p.ineqs.size();
  const std::size_t m = ni + p.eqs.size();

  Dictionary d;
  d.t.assign(m, std::vector<Rat>(n));
  d.rhs.resize(m);
  d.basic.resize(m);
  d.free_row.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = i < ni ? p.ineqs[i] : p.eqs[i - ni];
    if (c.a.size() != n) throw InputError("lp: constraint has wrong dimension");
    for (std::size_t j = 0; j < n; ++j) d.t[i][j] = c.a[j];
    d.rhs[i] = c.b;
    d.basic[i] = n + i;
  }
  d.nonbasic.resize(n);
  for (std::size_t j = 0; j < n; ++j) d.nonbasic[j] = j;
  d.costs.assign(1, objective);
  d.values.assign(1, Rat(0));

  auto is_x = [n](std::size_t v) { return v < n; };

  // Equalities: pivot a free variable in, then fix the slack at zero.
  for (std::size_t i = 0; i < d.t.size();) {
    if (d.basic[i] < n + ni || d.free_row[i]) {
      ++i;
      continue;
    }
    std::size_t e = kNone;
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
      if (is_x(d.nonbasic[j]) && d.t[i][j] != 0) {
        e = j;
        break;
      }
    if (e == kNone) {
      if (d.rhs[i] != 0) return LpResult{LpStatus::infeasible, 0, {}};
      d.drop_row(i);
      continue;
    }
    d.pivot(i, e);
    d.free_row[i] = true;
    d.drop_column(e);
    ++i;
  }

  // Remaining free variables enter the basis in some inequality row; a free
  // variable absent from every inequality is fixed at 0.
  bool unbounded_direction = false;
  for (std::size_t j = 0; j < d.nonbasic.size();) {
    if (!is_x(d.nonbasic[j])) {
      ++j;
      continue;
    }
    std::size_t r = kNone;
    for (std::size_t i = 0; i < d.t.size(); ++i)
      if (!d.free_row[i] && d.t[i][j] != 0) {
        r = i;
        break;
      }
    if (r == kNone) {
      if (d.costs[0][j] != 0) unbounded_direction = true;
      d.drop_column(j);
      continue;
    }
    d.pivot(r, j);
    d.free_row[r] = true;
    ++j;
  }

  // Phase 1 with a single artificial variable a: basic_i = rhs_i - ... + a.
  std::size_t worst = kNone;
  for (std::size_t i = 0; i < d.t.size(); ++i)
    if (!d.free_row[i] && d.rhs[i] < 0 && (worst == kNone || d.rhs[i] < d.rhs[worst])) worst = i;
  if (worst != kNone) {
    const std::size_t art = n + m;
    for (std::size_t i = 0; i < d.t.size(); ++i) d.t[i].push_back(d.free_row[i] ? 0 : -1);
    d.costs[0].push_back(0);
    std::vector<Rat> w(d.nonbasic.size() + 1, Rat(0));
    w.back() = -1;
    d.costs.push_back(std::move(w));
    d.values.push_back(0);
    d.nonbasic.push_back(art);
    d.pivot(worst, d.nonbasic.size() - 1);
    d.optimize(1);
    if (d.values[1] != 0) return LpResult{LpStatus::infeasible, 0, {}};
    for (std::size_t i = 0; i < d.t.size(); ++i) {
      if (d.basic[i] != art) continue;
      std::size_t e = kNone;
      for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
        if (d.t[i][j] != 0) {
          e = j;
          break;
        }
      if (e == kNone)
        d.drop_row(i);
      else
        d.pivot(i, e);
      break;
    }
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
      if (d.nonbasic[j] == art) {
        d.drop_column(j);
        break;
      }
    d.costs.pop_back();
    d.values.pop_back();
  }

  if (unbounded_direction || !d.optimize(0)) return LpResult{LpStatus::unbounded, 0, {}};

  LpResult res;
  res.status = LpStatus::optimal;
  res.value = d.values[0];
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < d.t.size(); ++i)
    if (is_x(d.basic[i])) res.x[d.basic[i]] = d.rhs[i];
  return res;
}

}  // namespace latcount
