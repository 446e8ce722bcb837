#include "latcount/polyhedron.hpp"

#include "latcount/error.hpp"
#include "latcount/linalg.hpp"
#include "latcount/lp.hpp"

namespace latcount {

bool Polyhedron::contains(const RatVec& x) const {
  if (x.size() != dim) throw InputError("point has wrong dimension");
  for (const auto& c : ineqs)
    if (dot(c.a, x) > c.b) return false;
  for (const auto& c : eqs)
    if (dot(c.a, x) != c.b) return false;
  return true;
}

bool relint_contains(const Cell& cell, const RatVec& x) {
  const Polyhedron& p = cell.closed;
  if (x.size() != p.dim) throw InputError("point has wrong dimension");
  for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
    Rat v = dot(p.ineqs[i].a, x);
    if (v > p.ineqs[i].b) return false;
    if (cell.strict[i] && v == p.ineqs[i].b) return false;
  }
  for (const auto& c : p.eqs)
    if (dot(c.a, x) != c.b) return false;
  return true;
}

std::optional<RatVec> find_point(const Polyhedron& p) {
  LpResult r = lp_maximize(p, RatVec(p.dim, Rat(0)));
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.x;
}

bool is_empty(const Polyhedron& p) { return !find_point(p).has_value(); }

std::optional<RatVec> find_point(const Cell& cell) {
  bool any_strict = false;
  for (bool s : cell.strict) any_strict = any_strict || s;
  if (!any_strict) return find_point(cell.closed);

  // Maximize a common slack e on the strict rows, capped at 1.
  const Polyhedron& p = cell.closed;
  const std::size_t n = p.dim;
  Polyhedron q{n + 1, {}, {}};
  for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
    RatVec a = p.ineqs[i].a;
    a.push_back(cell.strict[i] ? 1 : 0);
    q.ineqs.push_back({std::move(a), p.ineqs[i].b});
  }
  for (const auto& c : p.eqs) {
    RatVec a = c.a;
    a.push_back(0);
    q.eqs.push_back({std::move(a), c.b});
  }
  RatVec cap(n + 1, Rat(0));
  cap[n] = 1;
  q.ineqs.push_back({cap, 1});
  LpResult r = lp_maximize(q, cap);
  if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

std::optional<std::pair<RatVec, RatVec>> bounding_box(const Polyhedron& p) {
  RatVec lo(p.dim), hi(p.dim);
  RatVec obj(p.dim, Rat(0));
  for (std::size_t j = 0; j < p.dim; ++j) {
    obj[j] = 1;
    LpResult up = lp_maximize(p, obj);
    if (up.status != LpStatus::optimal) return std::nullopt;
    LpResult down = lp_minimize(p, obj);
    if (down.status != LpStatus::optimal) return std::nullopt;
    hi[j] = up.value;
    lo[j] = down.value;
    obj[j] = 0;
  }
  return std::make_pair(std::move(lo), std::move(hi));
}

bool is_bounded(const Polyhedron& p) {
  Polyhedron cone{p.dim, {}, {}};
  for (const auto& c : p.ineqs) cone.ineqs.push_back({c.a, 0});
  for (const auto& c : p.eqs) cone.eqs.push_back({c.a, 0});
  RatVec obj(p.dim, Rat(0));
  for (std::size_t j = 0; j < p.dim; ++j) {
    for (int sgn : {1, -1}) {
      obj[j] = sgn;
      if (lp_maximize(cone, obj).status != LpStatus::optimal) return false;
    }
    obj[j] = 0;
  }
  return true;
}

std::vector<std::size_t> implicit_equalities(const Polyhedron& p) {
  // Repeatedly maximize the total slack (each capped at 1) of the rows not
  // yet known to be slack somewhere; rows that never gain slack are tight
  // on all of p.
  const std::size_t n = p.dim;
  const std::size_t m = p.ineqs.size();
  std::vector<bool> slack_somewhere(m, false);
  for (;;) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < m; ++i)
      if (!slack_somewhere[i]) open.push_back(i);
    if (open.empty()) return {};
    const std::size_t k = open.size();
    Polyhedron q{n + k, {}, {}};
    std::vector<std::size_t> slot(m, k);
    for (std::size_t t = 0; t < k; ++t) slot[open[t]] = t;
    for (std::size_t i = 0; i < m; ++i) {
      RatVec a = p.ineqs[i].a;
      a.resize(n + k, Rat(0));
      if (slot[i] < k) a[n + slot[i]] = 1;
      q.ineqs.push_back({std::move(a), p.ineqs[i].b});
    }
    for (const auto& c : p.eqs) {
      RatVec a = c.a;
      a.resize(n + k, Rat(0));
      q.eqs.push_back({std::move(a), c.b});
    }
    RatVec obj(n + k, Rat(0));
    for (std::size_t t = 0; t < k; ++t) {
      RatVec e(n + k, Rat(0));
      e[n + t] = 1;
      q.ineqs.push_back({e, 1});
      e[n + t] = -1;
      q.ineqs.push_back({e, 0});
      obj[n + t] = 1;
    }
    LpResult r = lp_maximize(q, obj);
    if (r.status != LpStatus::optimal)
      throw PreconditionError("implicit_equalities: polyhedron is empty");
    if (r.value == 0) return open;
    for (std::size_t t = 0; t < k; ++t)
      if (r.x[n + t] > 0) slack_somewhere[open[t]] = true;
  }
}

bool contains_line(const Polyhedron& p) {
  RatMat m(p.ineqs.size() + p.eqs.size(), p.dim);
  std::size_t r = 0;
  for (const auto& c : p.ineqs) {
    for (std::size_t j = 0; j < p.dim; ++j) m(r, j) = c.a[j];
    ++r;
  }
  for (const auto& c : p.eqs) {
    for (std::size_t j = 0; j < p.dim; ++j) m(r, j) = c.a[j];
    ++r;
  }
  return rank(m) < p.dim;
}

Constraint integer_normalized(const Constraint& c) {
  RatVec all = c.a;
  all.push_back(c.b);
  IntVec v = primitive_direction(all);
  Constraint out;
  out.b = v.back();
  v.pop_back();
  out.a = to_rat(v);
  return out;
}

Constraint tighten_for_integers(const Constraint& c, bool strict) {
  IntVec a = primitive_direction(c.a);
  if (is_zero(a)) return c;
  // Factor f > 0 with a' = f * a.
  Rat f;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (c.a[j] != 0) {
      f = Rat(a[j]) / c.a[j];
      break;
    }
  Rat b = c.b * f;
  Int nb = strict ? Int(ceil_of(b) - 1) : floor_of(b);
  return Constraint{to_rat(a), Rat(nb)};
}

}  // namespace latcount
