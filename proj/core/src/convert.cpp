#include "latcount/convert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "latcount/cones.hpp"
#include "latcount/error.hpp"
#include "latcount/specialize.hpp"

namespace latcount {

namespace {

PiecewiseStepPoly zero_on(const Cell& domain) {
  return {domain.dim(), {{domain, StepPoly(domain.dim())}}};
}

// 1 + floor(y) + floor(-y): 1 when y is an integer, else 0.
StepPoly integrality_indicator(const Constraint& y, std::size_t n) {
  return StepPoly::constant(n, 1) + StepPoly::floor_of(y.a, y.b) +
         StepPoly::floor_of(-y.a, -y.b);
}

PiecewiseStepPoly count_in(const ParametricPolytope& p, const Cell& domain) {
  const std::size_t n = p.n;
  if (!p.eqs.empty()) {
    EqualityElimination el = eliminate_equalities(p);
    if (el.empty) return zero_on(domain);
    PiecewiseStepPoly r = count_in(el.reduced, domain);
    if (!el.integrality.empty()) {
      StepPoly g = StepPoly::constant(n, 1);
      for (const auto& y : el.integrality) g = g * integrality_indicator(y, n);
      r = multiply(r, g);
    }
    return r;
  }

  ChamberDecomposition dec = chamber_decomposition(p, domain);
  PiecewiseStepPoly out{n, {}};
  for (std::size_t ci = 0; ci < dec.chambers.size(); ++ci) {
    const Chamber& ch = dec.chambers[ci];
    if (ch.vertices.empty()) {
      out.pieces.push_back({ch.cell, StepPoly(n)});
      continue;
    }
    // Rows tight at every vertex hold with equality on the whole fiber.
    std::vector<std::size_t> common = ch.vertices.front().tight;
    for (std::size_t i = 1; i < ch.vertices.size(); ++i) {
      std::vector<std::size_t> next;
      const auto& t = ch.vertices[i].tight;
      std::set_intersection(common.begin(), common.end(), t.begin(), t.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (!common.empty()) {
      ParametricPolytope q{n, p.d, {}, {}};
      for (std::size_t i = 0; i < dec.polytope.ineqs.size(); ++i) {
        const bool eq = std::binary_search(common.begin(), common.end(), i);
        (eq ? q.eqs : q.ineqs).push_back(dec.polytope.ineqs[i]);
      }
      for (auto& piece : count_in(q, ch.cell).pieces) out.pieces.push_back(std::move(piece));
      continue;
    }
    out.pieces.push_back({ch.cell, specialize_to_constant(brion_sum(dec, ci))});
  }
  return out;
}

}  // namespace

PiecewiseStepPoly count_parametric(const ParametricPolytope& p, const Cell& domain) {
  p.validate();
  if (domain.dim() != p.n) throw InputError("domain has wrong dimension");
  if (!p.equalities_as_pairs().fibers_bounded())
    throw PreconditionError("P_s is unbounded: the recession cone {t : B t <= 0} is nontrivial");
  PiecewiseStepPoly out = count_in(p, domain);
  if (out.degree() > p.d) throw std::logic_error("count_parametric: degree exceeds d");
  return out;
}

PiecewiseStepPoly count_parametric(const ParametricPolytope& p) {
  return count_parametric(p, Cell::universe(p.n));
}

RatGenFun lattice_point_genfun(const Polyhedron& q) {
  const std::size_t dim = q.dim;
  RatGenFun out{dim, {}};
  if (is_empty(q)) return out;

  ParametricPolytope p{0, dim, {}, {}};
  std::vector<std::size_t> imp = implicit_equalities(q);
  for (std::size_t i = 0; i < q.ineqs.size(); ++i) {
    ParamConstraint r{{}, q.ineqs[i].a, q.ineqs[i].b};
    const bool eq = std::find(imp.begin(), imp.end(), i) != imp.end();
    (eq ? p.eqs : p.ineqs).push_back(std::move(r));
  }
  for (const auto& e : q.eqs) p.eqs.push_back({{}, e.a, e.b});

  EqualityElimination el = eliminate_equalities(p);
  if (el.empty) return out;
  for (const auto& y : el.integrality)
    if (!is_integer(y.b)) return out;
  const ParametricPolytope& r = el.reduced;
  const std::size_t dz = r.d;
  if (contains_line(r.fiber({})))
    throw PreconditionError("lattice_point_genfun: polyhedron contains a line");

  for (const auto& v : parametric_vertices(r, false)) {
    const RatVec& x = v.map.offset;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < r.ineqs.size(); ++i)
      if (!is_zero(r.ineqs[i].b) && dot(r.ineqs[i].b, x) == r.ineqs[i].c) tight.push_back(i);
    for (const auto& t : vertex_cone_gf(vertex_cone(r, v.map, tight))) {
      GFTerm g;
      g.coeff = t.coeff.constant_term();
      g.num.assign(dim, Int(0));
      for (std::size_t i = 0; i < dim; ++i) {
        Rat e = el.back_offset[i];
        for (std::size_t j = 0; j < dz; ++j) e += el.back_free(i, j) * t.num[j].constant_term();
        g.num[i] = e.get_num();
      }
      for (const auto& b : t.denoms) {
        IntVec w(dim, Int(0));
        for (std::size_t i = 0; i < dim; ++i) {
          Rat e = 0;
          for (std::size_t j = 0; j < dz; ++j) e += el.back_free(i, j) * b[j];
          w[i] = e.get_num();
        }
        g.denoms.push_back(std::move(w));
      }
      std::sort(g.denoms.begin(), g.denoms.end());
      out.terms.push_back(std::move(g));
    }
  }
  out.normalize();
  return out;
}

RatGenFun genfun_parametric(const ParametricPolytope& p) {
  p.validate();
  if (!p.equalities_as_pairs().fibers_bounded())
    throw PreconditionError("P_s is unbounded: the recession cone {t : B t <= 0} is nontrivial");
  RatGenFun g = lattice_point_genfun(p.lifted());
  return specialize_last_k(g, p.d);
}

PiecewiseStepPoly vpf_term_to_step(const GFTerm& term, const IntVec& l) {
  const std::size_t n = term.num.size();
  if (l.size() != n) throw InputError("l has wrong dimension");
  GFTerm t = orient_to_l(term, l);

  // Number of nonnegative integer solutions of sum_j lambda_j b_j = s.
  thread_local std::map<std::pair<std::size_t, std::vector<IntVec>>, PiecewiseStepPoly> cache;
  auto key = std::make_pair(n, t.denoms);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const std::size_t k = t.denoms.size();
    ParametricPolytope p{n, k, {}, {}};
    for (std::size_t j = 0; j < k; ++j) {
      RatVec b(k, Rat(0));
      b[j] = -1;
      p.ineqs.push_back({RatVec(n, Rat(0)), std::move(b), 0});
    }
    for (std::size_t i = 0; i < n; ++i) {
      RatVec a(n, Rat(0)), b(k);
      a[i] = -1;
      for (std::size_t j = 0; j < k; ++j) b[j] = t.denoms[j][i];
      p.eqs.push_back({std::move(a), std::move(b), 0});
    }
    if (cache.size() > 1024) cache.clear();
    it = cache.emplace(std::move(key), count_parametric(p)).first;
  }
  PiecewiseStepPoly r = shifted(it->second, t.num);
  for (auto& piece : r.pieces) piece.value *= t.coeff;
  return r;
}

PiecewiseStepPoly gf_to_step(const RatGenFun& f, const IntVec& l) {
  validate(f);
  if (l.size() != f.n) throw InputError("l has wrong dimension");
  if (f.terms.empty()) return zero_on(Cell::universe(f.n));
  // Orient everything first so a bad l is reported before any work.
  orient_to_l(f, l);
  std::vector<PiecewiseStepPoly> parts;
  parts.reserve(f.terms.size());
  for (const auto& t : f.terms) parts.push_back(vpf_term_to_step(t, l));
  PiecewiseStepPoly out = sum_piecewise(parts);
  if (out.degree() > f.k_bound()) throw std::logic_error("gf_to_step: degree exceeds k");
  return out;
}

RatGenFun step_to_gf(const PiecewiseStepPoly& c) {
  const std::size_t n = c.n;
  RatGenFun out{n, {}};
  for (const auto& piece : c.pieces) {
    if (piece.value.is_zero()) continue;
    if (contains_line(piece.cell.closed))
      throw PreconditionError("step_to_gf: a piece with nonzero value contains a line");
    std::vector<Constraint> ineqs;
    for (std::size_t i = 0; i < piece.cell.closed.ineqs.size(); ++i)
      ineqs.push_back(tighten_for_integers(piece.cell.closed.ineqs[i], piece.cell.strict[i]));

    for (const auto& [mono, alpha] : piece.value.terms()) {
      const std::size_t k = mono.size();
      auto lift = [&](const RatVec& a) {
        RatVec x = a;
        x.resize(n + k, Rat(0));
        return x;
      };
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        // floor(v) = #{1 <= t <= v} - #{v < t <= 0}; one side is always empty.
        Polyhedron q{n + k, {}, {}};
        for (const auto& h : ineqs) q.ineqs.push_back({lift(h.a), h.b});
        for (const auto& h : piece.cell.closed.eqs) q.eqs.push_back({lift(h.a), h.b});
        Rat sign = alpha;
        for (std::size_t j = 0; j < k; ++j) {
          const FloorForm& f = mono[j];
          RatVec unit(n + k, Rat(0));
          unit[n + j] = 1;
          RatVec row = lift(f.a);
          if (((mask >> j) & 1) == 0) {
            q.ineqs.push_back({-unit, -1});
            row = -row;
            row[n + j] = 1;
            q.ineqs.push_back({std::move(row), f.b});
          } else {
            sign = -sign;
            q.ineqs.push_back({unit, 0});
            row[n + j] = -1;
            q.ineqs.push_back(tighten_for_integers({std::move(row), -f.b}, true));
          }
        }
        RatGenFun g = specialize_last_k(lattice_point_genfun(q), k);
        for (auto& t : g.terms) {
          t.coeff *= sign;
          out.terms.push_back(std::move(t));
        }
      }
    }
  }
  out.normalize();
  return out;
}

std::vector<Polyhedron> supports_of(const PiecewiseStepPoly& c) {
  std::vector<Polyhedron> out;
  for (const auto& p : c.pieces)
    if (!p.value.is_zero()) out.push_back(p.cell.closed);
  return out;
}

IntVec pick_l(const std::vector<Polyhedron>& supports, const std::vector<IntVec>& denoms,
              std::size_t n, std::size_t bound) {
  for (const auto& b : denoms)
    if (b.size() != n) throw InputError("pick_l: denominator has wrong dimension");
  for (const auto& s : supports)
    if (s.dim != n) throw InputError("pick_l: support has wrong dimension");
  if (n == 0) return {};
  if (bound == 0) bound = 10 * (n + 1);

  auto admissible = [&](const IntVec& l) {
    for (const auto& b : denoms)
      if (dot(l, b) == 0) return false;
    for (const auto& s : supports) {
      Polyhedron h = s;
      h.ineqs.push_back({-to_rat(l), 0});
      if (!is_empty(h) && !is_bounded(h)) return false;
    }
    return true;
  };

  for (long r = 1; r <= static_cast<long>(bound); ++r) {
    std::vector<long> z(n, -r);
    for (;;) {
      long top = 0;
      for (long x : z) top = std::max(top, std::abs(x));
      if (top == r) {
        IntVec l(z.begin(), z.end());
        if (admissible(l)) return l;
      }
      std::size_t i = n;
      while (i > 0 && z[i - 1] == r) z[--i] = -r;
      if (i == 0) break;
      ++z[i - 1];
    }
  }
  throw PreconditionError("pick_l: no admissible l with max-norm <= " + std::to_string(bound));
}

IntVec pick_l(const Polyhedron& support, const std::vector<IntVec>& denoms,
              std::size_t bound) {
  return pick_l(std::vector<Polyhedron>{support}, denoms, support.dim, bound);
}

}  // namespace latcount
