#include "latcount/cones.hpp"

#include <algorithm>
#include <map>

#include "latcount/error.hpp"
#include "latcount/linalg.hpp"

namespace latcount {

namespace {

RatMat rows_to_mat(const std::vector<IntVec>& rows, std::size_t d) {
  RatMat m(rows.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<IntVec> negative_dual_basis(const std::vector<IntVec>& normals) {
  const std::size_t d = normals.size();
  auto inv = inverse(rows_to_mat(normals, d));
  if (!inv) throw PreconditionError("cone normals are linearly dependent");
  std::vector<IntVec> out(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i) {
    RatVec col(d);
    for (std::size_t j = 0; j < d; ++j) col[j] = -(*inv)(j, i);
    Int den = common_denominator(col);
    for (std::size_t j = 0; j < d; ++j) out[i][j] = Rat(col[j] * den).get_num();
  }
  return out;
}

}  // namespace

std::vector<IntVec> SimplicialCone::generators() const {
  // Primitive multiples of the negative dual basis.
  std::vector<IntVec> g = negative_dual_basis(normals);
  for (auto& v : g) v = primitive(v);
  return g;
}

Int SimplicialCone::index() const {
  return abs(determinant(to_int(rows_to_mat(normals, normals.size()))));
}

VertexCone vertex_cone(const ParametricPolytope& p, const AffineMap& apex,
                       const std::vector<std::size_t>& tight_rows) {
  VertexCone k;
  k.apex = apex;
  for (std::size_t i : tight_rows) {
    IntVec c = primitive_direction(p.ineqs.at(i).b);
    if (is_zero(c)) continue;
    if (std::find(k.normals.begin(), k.normals.end(), c) == k.normals.end())
      k.normals.push_back(std::move(c));
  }
  return k;
}

namespace {

template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Pulling triangulation of the full-dimensional pointed cone spanned by
// vecs[ids] inside Q^r. Returns index sets of size r.
std::vector<std::vector<std::size_t>> pulling(const std::vector<RatVec>& vecs,
                                              const std::vector<std::size_t>& ids,
                                              std::size_t r) {
  if (ids.size() == r) return {ids};
  if (r == 1) return {{ids.front()}};
  const std::size_t apex = ids.front();
  std::vector<std::vector<std::size_t>> facets;
  for_each_subset(ids.size(), r - 1, [&](const std::vector<std::size_t>& sub) {
    RatMat m(r - 1, r);
    for (std::size_t i = 0; i < r - 1; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = vecs[ids[sub[i]]][j];
    auto sol = solve_rational_system(m, RatVec(r - 1, Rat(0)));
    if (sol->nullspace.size() != 1) return;
    const RatVec& h = sol->nullspace.front();
    int side = 0;
    std::vector<std::size_t> on;
    for (std::size_t id : ids) {
      int sg = sign_of(dot(h, vecs[id]));
      if (sg == 0) {
        on.push_back(id);
        continue;
      }
      if (side != 0 && sg != side) return;
      side = sg;
    }
    if (std::find(on.begin(), on.end(), apex) != on.end()) return;
    if (std::find(facets.begin(), facets.end(), on) == facets.end())
      facets.push_back(std::move(on));
  });

  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : facets) {
    // Coordinates of the facet's vectors in a basis of its span.
    std::vector<std::size_t> basis;
    RatMat acc(0, r);
    for (std::size_t id : f) {
      RatMat trial = acc;
      trial.append_row(vecs[id]);
      if (rank(trial) > acc.rows()) {
        acc = std::move(trial);
        basis.push_back(id);
      }
      if (basis.size() == r - 1) break;
    }
    RatMat bt = acc.transpose();  // r x (r-1)
    std::vector<RatVec> sub(vecs.size());
    for (std::size_t id : f) sub[id] = solve_rational_system(bt, vecs[id])->particular;
    for (auto simplex : pulling(sub, f, r - 1)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<SimplicialCone> triangulate(const std::vector<IntVec>& normals_in) {
  if (normals_in.empty()) return {SimplicialCone{}};
  const std::size_t d = normals_in.front().size();
  std::vector<IntVec> normals;
  for (const auto& c : normals_in) {
    IntVec p = primitive(c);
    if (is_zero(p)) continue;
    if (std::find(normals.begin(), normals.end(), p) == normals.end())
      normals.push_back(std::move(p));
  }
  RatMat m = rows_to_mat(normals, d);
  if (rank(m) != d) throw PreconditionError("cone is not pointed: its normals do not span");
  if (normals.size() == d) return {SimplicialCone{normals}};
  {
    // The primal cone must be full-dimensional: some h with <c, h> < 0 for all c.
    Cell c = Cell::universe(d);
    for (const auto& v : normals) c.add_ineq({to_rat(v), 0}, true);
    if (!find_point(c)) throw PreconditionError("cone is not full-dimensional");
  }

  std::vector<RatVec> vecs;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    vecs.push_back(to_rat(normals[i]));
    ids.push_back(i);
  }
  std::vector<SimplicialCone> out;
  for (const auto& simplex : pulling(vecs, ids, d)) {
    SimplicialCone k;
    for (std::size_t i : simplex) k.normals.push_back(normals[i]);
    out.push_back(std::move(k));
  }
  return out;
}

namespace {

Rat max_abs(const RatVec& v) {
  Rat m = 0;
  for (const auto& x : v) m = std::max(m, Rat(abs(x)));
  return m;
}

// Short nonzero vector of the lattice spanned by `basis`, in max-norm.
RatVec short_vector(const std::vector<RatVec>& basis) {
  RatVec best = basis.front();
  Rat best_norm = max_abs(best);
  if (best_norm < 1) return best;
  const std::size_t d = basis.size();
  for (int bound = 1; bound <= 3 && best_norm >= 1; ++bound) {
    std::vector<int> z(d, -bound);
    for (;;) {
      bool nonzero = false;
      for (int x : z) nonzero = nonzero || x != 0;
      if (nonzero) {
        RatVec v(basis.front().size(), Rat(0));
        for (std::size_t j = 0; j < d; ++j)
          if (z[j] != 0)
            for (std::size_t t = 0; t < v.size(); ++t) v[t] += z[j] * basis[j][t];
        Rat nm = max_abs(v);
        if (nm < best_norm) {
          best = std::move(v);
          best_norm = nm;
        }
      }
      std::size_t i = d;
      while (i > 0 && z[i - 1] == bound) z[--i] = -bound;
      if (i == 0) break;
      ++z[i - 1];
    }
  }
  return best;
}

void decompose(const std::vector<IntVec>& normals, int sign,
               std::vector<SignedUnimodularCone>& out) {
  const std::size_t d = normals.size();
  RatMat c = rows_to_mat(normals, d);
  Rat det = determinant(c);
  if (det == 0) throw PreconditionError("barvinok_decompose: cone is not simplicial");
  if (abs(det) == 1) {
    out.push_back({sign, normals, negative_dual_basis(normals)});
    return;
  }
  RatMat cinv = *inverse(c);
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(cinv.row_vec(i));
  RatVec lambda = short_vector(lll_reduce_rational(std::move(basis)));

  IntVec w(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < d; ++i) s += lambda[i] * c(i, j);
    w[j] = s.get_num();
  }
  {
    IntVec pw = primitive(w);
    if (pw != w) {
      Rat g;
      for (std::size_t j = 0; j < d; ++j)
        if (pw[j] != 0) {
          g = Rat(w[j]) / Rat(pw[j]);
          break;
        }
      for (auto& x : lambda) x /= g;
      w = std::move(pw);
    }
  }
  bool all_nonpos = true, all_nonneg = true;
  for (const auto& x : lambda) {
    all_nonpos = all_nonpos && x <= 0;
    all_nonneg = all_nonneg && x >= 0;
  }
  bool flip = false;
  if (all_nonpos)
    flip = true;
  else if (!all_nonneg)
    flip = -w < w;
  if (flip) {
    w = -w;
    lambda = -lambda;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (lambda[i] == 0) continue;
    std::vector<IntVec> child = normals;
    child[i] = w;
    decompose(child, sign * sign_of(lambda[i]), out);
  }
}

}  // namespace

std::vector<SignedUnimodularCone> barvinok_decompose(const SimplicialCone& k) {
  thread_local std::map<std::vector<IntVec>, std::vector<SignedUnimodularCone>> cache;
  auto it = cache.find(k.normals);
  if (it != cache.end()) return it->second;
  std::vector<SignedUnimodularCone> out;
  if (k.normals.empty()) {
    out.push_back({1, {}, {}});
  } else {
    for (const auto& c : k.normals)
      if (c.size() != k.normals.size())
        throw PreconditionError("barvinok_decompose: cone is not simplicial");
    decompose(k.normals, 1, out);
  }
  if (cache.size() > 4096) cache.clear();
  cache.emplace(k.normals, out);
  return out;
}

ParamGFTerm unimodular_gf(const SignedUnimodularCone& k, const AffineMap& apex) {
  const std::size_t d = k.normals.size();
  const std::size_t n = apex.linear.cols();
  ParamGFTerm t;
  t.coeff = StepPoly::constant(n, k.sign);
  t.num.assign(d, StepPoly(n));
  for (std::size_t i = 0; i < d; ++i) {
    RatVec coef(n, Rat(0));
    Rat c0 = 0;
    for (std::size_t r = 0; r < d; ++r) {
      const Rat ci(k.normals[i][r]);
      if (ci == 0) continue;
      c0 += ci * apex.offset[r];
      for (std::size_t j = 0; j < n; ++j) coef[j] += ci * apex.linear(r, j);
    }
    StepPoly fl = StepPoly::floor_of(coef, c0);
    for (std::size_t j = 0; j < d; ++j)
      if (k.dual_gens[i][j] != 0) t.num[j] -= fl * Rat(k.dual_gens[i][j]);
  }
  t.denoms = k.dual_gens;
  std::sort(t.denoms.begin(), t.denoms.end());
  return t;
}

std::vector<ParamGFTerm> vertex_cone_gf(const VertexCone& k) {
  std::vector<ParamGFTerm> out;
  for (const auto& simplex : triangulate(k.normals))
    for (const auto& u : barvinok_decompose(simplex)) out.push_back(unimodular_gf(u, k.apex));
  return out;
}

ParamGenFun brion_sum(const ChamberDecomposition& dec, std::size_t chamber) {
  const Chamber& ch = dec.chambers.at(chamber);
  ParamGenFun f{dec.polytope.n, dec.polytope.d, {}};
  for (const auto& cv : ch.vertices) {
    VertexCone k = vertex_cone(dec.polytope, dec.vertices[cv.vertex].map, cv.tight);
    for (auto& t : vertex_cone_gf(k)) f.terms.push_back(std::move(t));
  }
  return f;
}

}  // namespace latcount
