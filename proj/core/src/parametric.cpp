#include "latcount/parametric.hpp"

#include <algorithm>

#include "latcount/arrangement.hpp"
#include "latcount/error.hpp"
#include "latcount/linalg.hpp"

namespace latcount {

ParametricPolytope ParametricPolytope::from_matrices(const RatMat& a,
                                                     const RatMat& b,
                                                     const RatVec& c) {
  if (a.rows() != b.rows() || b.rows() != c.size())
    throw InputError("A, B and c must have the same number of rows");
  ParametricPolytope p;
  p.n = a.cols();
  p.d = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    p.ineqs.push_back({a.row_vec(i), b.row_vec(i), c[i]});
  return p;
}

void ParametricPolytope::validate() const {
  auto check = [&](const ParamConstraint& r) {
    if (r.a.size() != n || r.b.size() != d)
      throw InputError("constraint row does not match dimensions n = " +
                       std::to_string(n) + ", d = " + std::to_string(d));
  };
  for (const auto& r : ineqs) check(r);
  for (const auto& r : eqs) check(r);
}

Polyhedron ParametricPolytope::fiber(const RatVec& s) const {
  if (s.size() != n) throw InputError("parameter point has wrong dimension");
  Polyhedron q{d, {}, {}};
  for (const auto& r : ineqs) q.ineqs.push_back({r.b, r.c - dot(r.a, s)});
  for (const auto& r : eqs) q.eqs.push_back({r.b, r.c - dot(r.a, s)});
  return q;
}

Polyhedron ParametricPolytope::lifted() const {
  Polyhedron q{n + d, {}, {}};
  auto join = [](const ParamConstraint& r) {
    RatVec v = r.a;
    v.insert(v.end(), r.b.begin(), r.b.end());
    return Constraint{std::move(v), r.c};
  };
  for (const auto& r : ineqs) q.ineqs.push_back(join(r));
  for (const auto& r : eqs) q.eqs.push_back(join(r));
  return q;
}

bool ParametricPolytope::fibers_bounded() const {
  return is_bounded(fiber(RatVec(n, Rat(0))));
}

ParametricPolytope ParametricPolytope::equalities_as_pairs() const {
  ParametricPolytope p{n, d, ineqs, {}};
  for (const auto& r : eqs) {
    p.ineqs.push_back(r);
    p.ineqs.push_back({-r.a, -r.b, -r.c});
  }
  return p;
}

RatVec AffineMap::operator()(const RatVec& s) const {
  RatVec out = offset;
  for (std::size_t i = 0; i < linear.rows(); ++i)
    for (std::size_t j = 0; j < linear.cols(); ++j) out[i] += linear(i, j) * s[j];
  return out;
}

namespace {

// Calls f on every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Affine function s -> c - A_i s - B_i v(s), as coefficients and constant.
std::pair<RatVec, Rat> slack_of(const ParamConstraint& r, const AffineMap& v,
                                std::size_t n) {
  RatVec coef(n);
  for (std::size_t j = 0; j < n; ++j) {
    coef[j] = -r.a[j];
    for (std::size_t k = 0; k < r.b.size(); ++k) coef[j] -= r.b[k] * v.linear(k, j);
  }
  Rat c = r.c - dot(r.b, v.offset);
  return {std::move(coef), std::move(c)};
}

}  // namespace

std::vector<ParamVertex> parametric_vertices(const ParametricPolytope& input,
                                             bool check_bounded) {
  input.validate();
  const ParametricPolytope p = input.equalities_as_pairs();
  if (check_bounded && !p.fibers_bounded())
    throw PreconditionError("P_s is unbounded: the recession cone {t : B t <= 0} is nontrivial");
  const std::size_t n = p.n, d = p.d, m = p.ineqs.size();

  std::vector<ParamVertex> out;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& rows) {
    RatMat bt(d, d), at(d, n);
    RatVec ct(d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& r = p.ineqs[rows[i]];
      for (std::size_t j = 0; j < d; ++j) bt(i, j) = r.b[j];
      for (std::size_t j = 0; j < n; ++j) at(i, j) = r.a[j];
      ct[i] = r.c;
    }
    auto inv = inverse(bt);
    if (!inv) return;
    AffineMap v;
    v.linear = RatMat(d, n);
    RatMat prod = *inv * at;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) v.linear(i, j) = -prod(i, j);
    v.offset = *inv * std::span<const Rat>(ct);

    for (const auto& w : out)
      if (w.map == v) return;

    Polyhedron act{n, {}, {}};
    for (std::size_t i = 0; i < m; ++i) {
      if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
      auto [coef, c] = slack_of(p.ineqs[i], v, n);
      // slack >= 0  <=>  -coef . s <= c
      if (is_zero(coef)) {
        if (c < 0) return;
        continue;
      }
      Constraint k{-coef, c};
      if (std::find(act.ineqs.begin(), act.ineqs.end(), k) == act.ineqs.end())
        act.ineqs.push_back(std::move(k));
    }
    if (is_empty(act)) return;
    out.push_back({std::move(v), rows, std::move(act)});
  });
  return out;
}

namespace {

// Parametrization s = base + span * z of the affine hull of a nonempty cell.
struct Hull {
  RatVec base;
  std::vector<RatVec> span;
};

Hull hull_of(const Cell& cell, const RatVec& sample) {
  const Polyhedron& p = cell.closed;
  std::vector<Constraint> eqs = p.eqs;
  bool loose = false;
  for (std::size_t i = 0; i < p.ineqs.size(); ++i) loose = loose || !cell.strict[i];
  if (loose)
    for (std::size_t i : implicit_equalities(p)) eqs.push_back(p.ineqs[i]);
  if (eqs.empty()) {
    Hull h{sample, {}};
    for (std::size_t j = 0; j < p.dim; ++j) {
      RatVec e(p.dim, Rat(0));
      e[j] = 1;
      h.span.push_back(std::move(e));
    }
    return h;
  }
  RatMat m(eqs.size(), p.dim);
  RatVec rhs(eqs.size());
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) m(i, j) = eqs[i].a[j];
    rhs[i] = eqs[i].b;
  }
  auto sol = solve_rational_system(m, rhs);
  if (!sol) throw PreconditionError("cell with inconsistent equalities");
  return {sample, std::move(sol->nullspace)};
}

bool vanishes_on(const Hull& h, const RatVec& coef, const Rat& c) {
  if (dot(coef, h.base) + c != 0) return false;
  for (const auto& v : h.span)
    if (dot(coef, v) != 0) return false;
  return true;
}

bool maps_agree_on(const Hull& h, const AffineMap& x, const AffineMap& y) {
  if (x(h.base) != y(h.base)) return false;
  for (const auto& v : h.span) {
    for (std::size_t i = 0; i < x.linear.rows(); ++i) {
      Rat a = 0, b = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        a += x.linear(i, j) * v[j];
        b += y.linear(i, j) * v[j];
      }
      if (a != b) return false;
    }
  }
  return true;
}

}  // namespace

ChamberDecomposition chamber_decomposition(const ParametricPolytope& input,
                                           const Cell& domain) {
  if (domain.dim() != input.n) throw InputError("domain has wrong dimension");
  ChamberDecomposition out;
  out.polytope = input.equalities_as_pairs();
  out.vertices = parametric_vertices(input);
  const ParametricPolytope& p = out.polytope;

  std::vector<Hyperplane> hs;
  for (const auto& v : out.vertices)
    for (const auto& c : v.activity.ineqs) hs.push_back(c);

  for (auto& ac : arrangement_cells(hs, domain)) {
    Chamber ch;
    ch.cell = std::move(ac.cell);
    ch.sample = std::move(ac.point);
    std::optional<Hull> hull;
    for (std::size_t vi = 0; vi < out.vertices.size(); ++vi) {
      const ParamVertex& v = out.vertices[vi];
      if (!v.activity.contains(ch.sample)) continue;
      if (!hull) hull = hull_of(ch.cell, ch.sample);
      bool dup = false;
      for (const auto& cv : ch.vertices)
        if (maps_agree_on(*hull, out.vertices[cv.vertex].map, v.map)) {
          dup = true;
          break;
        }
      if (dup) continue;
      ChamberVertex cv{vi, {}};
      for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
        if (is_zero(p.ineqs[i].b)) continue;
        auto [coef, c] = slack_of(p.ineqs[i], v.map, p.n);
        if (vanishes_on(*hull, coef, c)) cv.tight.push_back(i);
      }
      ch.vertices.push_back(std::move(cv));
    }
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

ChamberDecomposition chamber_decomposition(const ParametricPolytope& p) {
  return chamber_decomposition(p, Cell::universe(p.n));
}

namespace {

// Scales a row so that all of a, b, c are integers.
ParamConstraint integral_row(const ParamConstraint& r) {
  RatVec all = r.a;
  all.insert(all.end(), r.b.begin(), r.b.end());
  all.push_back(r.c);
  Int den = common_denominator(all);
  ParamConstraint out = r;
  for (auto& x : out.a) x *= den;
  for (auto& x : out.b) x *= den;
  out.c *= den;
  return out;
}

}  // namespace

EqualityElimination eliminate_equalities(const ParametricPolytope& p) {
  p.validate();
  const std::size_t n = p.n, d = p.d;
  EqualityElimination res;
  res.reduced.n = n;

  // Independent rows of the variable part; the others give conditions on s.
  std::vector<ParamConstraint> ind;
  std::vector<ParamConstraint> pure_s;
  {
    RatMat acc(0, d);
    for (const auto& raw : p.eqs) {
      ParamConstraint r = integral_row(raw);
      RatMat trial = acc;
      trial.append_row(r.b);
      if (rank(trial) > acc.rows()) {
        acc = std::move(trial);
        ind.push_back(std::move(r));
        continue;
      }
      // r.b = sum mu_i ind_i.b; the condition is r - sum mu_i ind_i with b = 0.
      ParamConstraint cond{r.a, RatVec(d, Rat(0)), r.c};
      if (!ind.empty()) {
        auto sol = solve_rational_system(acc.transpose(), r.b);
        for (std::size_t i = 0; i < ind.size(); ++i) {
          const Rat& mu = sol->particular[i];
          for (std::size_t j = 0; j < n; ++j) cond.a[j] -= mu * ind[i].a[j];
          cond.c -= mu * ind[i].c;
        }
      }
      if (is_zero(cond.a)) {
        if (cond.c != 0)
          throw PreconditionError("equalities are rationally inconsistent");
        continue;
      }
      pure_s.push_back(std::move(cond));
    }
  }
  const std::size_t k = ind.size();
  const std::size_t dz = d - k;

  IntMat e(k, d);
  RatMat ea(k, n);
  RatVec ec(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) e(i, j) = ind[i].b[j].get_num();
    for (std::size_t j = 0; j < n; ++j) ea(i, j) = ind[i].a[j];
    ec[i] = ind[i].c;
  }
  // Right-hand side r(s) = ec - ea s of  e t = r(s).

  res.back_linear = RatMat(d, n);
  res.back_offset = RatVec(d, Rat(0));
  res.back_free = RatMat(d, dz);

  // Pivot columns: greedily independent.
  std::vector<std::size_t> piv, free_cols;
  {
    RatMat er = to_rat(e);
    for (std::size_t j = 0; j < d; ++j) {
      if (piv.size() == k) {
        free_cols.push_back(j);
        continue;
      }
      RatMat trial(k, piv.size() + 1);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < piv.size(); ++c) trial(i, c) = er(i, piv[c]);
        trial(i, piv.size()) = er(i, j);
      }
      if (rank(trial) == piv.size() + 1)
        piv.push_back(j);
      else
        free_cols.push_back(j);
    }
  }
  IntMat s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) s(i, c) = e(i, piv[c]);
  const Int det_s = k == 0 ? Int(1) : determinant(s);

  if (abs(det_s) == 1) {
    // t_piv = S^-1 (r(s) - F z), t_free = z.
    RatMat sinv = *inverse(to_rat(s));
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t row = piv[c];
      for (std::size_t i = 0; i < k; ++i) {
        res.back_offset[row] += sinv(c, i) * ec[i];
        for (std::size_t j = 0; j < n; ++j)
          res.back_linear(row, j) -= sinv(c, i) * ea(i, j);
        for (std::size_t f = 0; f < dz; ++f)
          res.back_free(row, f) -= sinv(c, i) * Rat(e(i, free_cols[f]));
      }
    }
    for (std::size_t f = 0; f < dz; ++f) res.back_free(free_cols[f], f) = 1;
    // witness rows: the equality rows, then unit rows for the free columns.
    res.witness = IntMat(d, d);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j) res.witness(i, j) = e(i, j);
    for (std::size_t f = 0; f < dz; ++f) res.witness(k + f, free_cols[f]) = 1;
  } else {
    // e v = [H 0]; t = v (y; z) with H y = r(s).
    ColumnHermite ch = column_hermite_form(e);
    RatMat h(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < k; ++c) h(i, c) = ch.h(i, c);
    RatMat hinv = *inverse(h);
    RatMat ylin(k, n);
    RatVec yoff(k, Rat(0));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < k; ++i) {
        yoff[c] += hinv(c, i) * ec[i];
        for (std::size_t j = 0; j < n; ++j) ylin(c, j) -= hinv(c, i) * ea(i, j);
      }
    for (std::size_t c = 0; c < k; ++c) {
      RatVec coef = ylin.row_vec(c);
      if (is_integer(yoff[c]) &&
          std::all_of(coef.begin(), coef.end(), [](const Rat& x) { return is_integer(x); }))
        continue;
      // y_c(s) is integral for some integer s iff yoff lies in Z + sum coef_j Z.
      RatVec gens = coef;
      gens.push_back(1);
      Int den = common_denominator(gens);
      Int g = 0;
      for (const auto& x : gens) g = gcd(g, Rat(x * den).get_num());
      Rat scaled = yoff[c] * den / g;
      if (!is_integer(scaled)) res.empty = true;
      res.integrality.push_back({std::move(coef), yoff[c]});
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        const Rat vr(ch.v(r, c));
        if (vr == 0) continue;
        res.back_offset[r] += vr * yoff[c];
        for (std::size_t j = 0; j < n; ++j) res.back_linear(r, j) += vr * ylin(c, j);
      }
      for (std::size_t f = 0; f < dz; ++f) res.back_free(r, f) = ch.v(r, k + f);
    }
    // (y; z) = v^-1 t.
    res.witness = to_int(*inverse(to_rat(ch.v)));
  }

  ParametricPolytope& q = res.reduced;
  q.d = dz;
  for (const auto& r : p.ineqs) {
    ParamConstraint nr{r.a, RatVec(dz, Rat(0)), r.c - dot(r.b, res.back_offset)};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < d; ++t) nr.a[j] += r.b[t] * res.back_linear(t, j);
    for (std::size_t f = 0; f < dz; ++f)
      for (std::size_t t = 0; t < d; ++t) nr.b[f] += r.b[t] * res.back_free(t, f);
    q.ineqs.push_back(std::move(nr));
  }
  for (const auto& c : pure_s) {
    q.ineqs.push_back({c.a, RatVec(dz, Rat(0)), c.c});
    q.ineqs.push_back({-c.a, RatVec(dz, Rat(0)), -c.c});
  }
  return res;
}

}  // namespace latcount
