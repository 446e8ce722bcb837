#include "latcount/arrangement.hpp"

#include <algorithm>

#include "latcount/error.hpp"
#include "latcount/linalg.hpp"
#include "latcount/lp.hpp"

namespace latcount {

Int phi_bound(std::size_t m, std::size_t d) {
  Int total = 0;
  for (std::size_t i = 0; i <= std::min(m, d); ++i) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), m, i);
    total += c;
  }
  return total;
}

std::optional<Hyperplane> canonical_hyperplane(const Hyperplane& h) {
  if (is_zero(h.a)) return std::nullopt;
  Constraint c = integer_normalized(h);
  for (const auto& x : c.a) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : c.a) y = -y;
      c.b = -c.b;
    }
    break;
  }
  return c;
}

std::size_t cell_dimension(const Cell& cell) {
  const Polyhedron& p = cell.closed;
  std::vector<std::size_t> tight = implicit_equalities(p);
  RatMat m(p.eqs.size() + tight.size(), p.dim);
  std::size_t r = 0;
  for (const auto& c : p.eqs) {
    for (std::size_t j = 0; j < p.dim; ++j) m(r, j) = c.a[j];
    ++r;
  }
  for (std::size_t i : tight) {
    for (std::size_t j = 0; j < p.dim; ++j) m(r, j) = p.ineqs[i].a[j];
    ++r;
  }
  return p.dim - rank(m);
}

namespace {

Rat eval(const Hyperplane& h, const RatVec& x) { return dot(h.a, x) - h.b; }

// Point of the closure with <a,x> beyond b in direction `sign`, or nullopt if
// there is none.
std::optional<RatVec> beyond(const Polyhedron& closure, const Hyperplane& h,
                             int sign) {
  RatVec obj = sign > 0 ? h.a : -h.a;
  LpResult r = lp_maximize(closure, obj);
  if (r.status == LpStatus::infeasible) return std::nullopt;
  if (r.status == LpStatus::unbounded) {
    Polyhedron capped = closure;
    capped.ineqs.push_back({obj, (sign > 0 ? h.b : Rat(-h.b)) + 1});
    r = lp_maximize(capped, obj);
    if (r.status != LpStatus::optimal) return std::nullopt;
  }
  Rat v = eval(h, r.x);
  if (sign > 0 ? v > 0 : v < 0) return r.x;
  return std::nullopt;
}

RatVec lerp(const RatVec& p, const RatVec& q, const Rat& t) {
  RatVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + t * (q[i] - p[i]);
  return out;
}

}  // namespace

std::vector<ArrangementCell> arrangement_cells(
    const std::vector<Hyperplane>& hyperplanes, const Cell& domain) {
  std::vector<Hyperplane> hs;
  for (const auto& h : hyperplanes) {
    if (h.a.size() != domain.dim())
      throw InputError("hyperplane has wrong dimension");
    auto c = canonical_hyperplane(h);
    if (!c) throw InputError("hyperplane with zero normal vector");
    if (std::find(hs.begin(), hs.end(), *c) == hs.end()) hs.push_back(*c);
  }

  std::vector<ArrangementCell> pieces;
  if (auto p = find_point(domain)) pieces.push_back({domain, *p});

  for (const auto& h : hs) {
    std::vector<ArrangementCell> next;
    next.reserve(pieces.size() * 2);
    for (auto& pc : pieces) {
      const Rat v = eval(h, pc.point);
      std::optional<RatVec> below, above;
      if (v <= 0) above = beyond(pc.cell.closed, h, +1);
      if (v >= 0) below = beyond(pc.cell.closed, h, -1);
      const bool has_below = v < 0 || below.has_value();
      const bool has_above = v > 0 || above.has_value();
      if (!(has_below && has_above) && v != 0) {
        next.push_back(std::move(pc));
        continue;
      }
      if (v == 0 && !has_below && !has_above) {
        next.push_back(std::move(pc));
        continue;
      }

      // Point on the hyperplane and points on each open side.
      RatVec on, lo, hi;
      if (v == 0) {
        on = pc.point;
        if (below) lo = lerp(pc.point, *below, Rat(1, 2));
        if (above) hi = lerp(pc.point, *above, Rat(1, 2));
      } else {
        const RatVec& far = v < 0 ? *above : *below;
        Rat fv = eval(h, far);
        Rat t0 = -v / (fv - v);
        on = lerp(pc.point, far, t0);
        RatVec across = lerp(pc.point, far, (1 + t0) / 2);
        if (v < 0) {
          lo = pc.point;
          hi = std::move(across);
        } else {
          hi = pc.point;
          lo = std::move(across);
        }
      }
      if (has_below) {
        Cell c = pc.cell;
        c.add_ineq(h, true);
        next.push_back({std::move(c), std::move(lo)});
      }
      {
        Cell c = pc.cell;
        c.add_eq(h);
        next.push_back({std::move(c), std::move(on)});
      }
      if (has_above) {
        Cell c = pc.cell;
        c.add_ineq({-h.a, -h.b}, true);
        next.push_back({std::move(c), std::move(hi)});
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

std::vector<Cell> hyperplane_arrangement(const std::vector<Hyperplane>& hyperplanes,
                                         const Cell& domain) {
  std::vector<Cell> out;
  for (auto& pc : arrangement_cells(hyperplanes, domain))
    out.push_back(std::move(pc.cell));
  return out;
}

std::vector<Cell> hyperplane_arrangement(const std::vector<Hyperplane>& hyperplanes,
                                         std::size_t dim) {
  return hyperplane_arrangement(hyperplanes, Cell::universe(dim));
}

}  // namespace latcount
