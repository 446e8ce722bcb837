// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "latcount/arrangement.hpp"
#include "latcount/cones.hpp"
#include "latcount/error.hpp"
#include "latcount/specialize.hpp"

using namespace latcount;
using namespace latcount::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

// Degree observations, checked by criterion 9.
std::vector<std::string> degree_violations;
std::size_t degree_checks = 0;

void check_degree(const PiecewiseStepPoly& c, std::size_t bound, const std::string& what) {
  ++degree_checks;
  if (c.degree() > bound)
    degree_violations.push_back(what + ": degree " + std::to_string(c.degree()) + " > " +
                                std::to_string(bound));
}

Rat fl(const Rat& x) { return Rat(floor_of(x)); }

// Integer points s with lo <= s_i <= hi satisfying pred, at most `want` of them.
std::vector<IntVec> points_where(long lo, long hi, std::size_t want,
                                 const std::function<bool(long, long)>& pred) {
  std::vector<IntVec> out;
  for (long a = lo; a <= hi && out.size() < want; ++a)
    for (long b = lo; b <= hi && out.size() < want; ++b)
      if (pred(a, b)) out.push_back(ivec({a, b}));
  return out;
}

bool in_q1(long s1, long s2) { return s2 < s1 && s1 < 2 * s2; }
bool in_q2(long s1, long s2) { return s1 > 2 * s2 && s2 > 0; }
bool in_q3(long s1, long s2) { return s2 > s1 && s1 > 0; }

// Tight rows of vertex vi in some full-dimensional chamber.
std::optional<std::vector<std::size_t>> full_dim_tight(const ChamberDecomposition& dec,
                                                       std::size_t vi) {
  for (const auto& ch : dec.chambers) {
    if (cell_dimension(ch.cell) != dec.polytope.n) continue;
    for (const auto& cv : ch.vertices)
      if (cv.vertex == vi) return cv.tight;
  }
  return std::nullopt;
}

// Indicator of the cone {t : B_i t <= c_i - A_i s, i in rows} at integer t.
bool in_cone(const ParametricPolytope& p, const std::vector<std::size_t>& rows, const IntVec& s,
             const IntVec& t) {
  for (std::size_t i : rows) {
    const auto& r = p.ineqs[i];
    Rat v = 0;
    for (std::size_t j = 0; j < p.n; ++j) v += r.a[j] * s[j];
    for (std::size_t j = 0; j < p.d; ++j) v += r.b[j] * t[j];
    if (v > r.c) return false;
  }
  return true;
}

Polyhedron cone_at(const ParametricPolytope& p, const std::vector<std::size_t>& rows,
                   const IntVec& s) {
  Polyhedron k{p.d, {}, {}};
  for (std::size_t i : rows) {
    const auto& r = p.ineqs[i];
    k.ineqs.push_back({r.b, r.c - dot(r.a, to_rat(s))});
  }
  return k;
}

// Series of the instantiated terms equals the cone indicator on [lo, hi]^2.
bool series_matches_cone(const std::vector<ParamGFTerm>& terms, const ParametricPolytope& p,
                         const std::vector<std::size_t>& rows, const IntVec& s, long lo, long hi,
                         std::string& why) {
  ParamGenFun f{p.n, p.d, terms};
  RatGenFun g = instantiate(f, s);
  std::vector<IntVec> denoms;
  for (const auto& t : g.terms)
    denoms.insert(denoms.end(), t.denoms.begin(), t.denoms.end());
  IntVec l = pick_l(cone_at(p, rows, s), denoms);
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b) {
      IntVec t = ivec({a, b});
      Rat want = in_cone(p, rows, s, t) ? 1 : 0;
      Rat got = series_coefficient(g, l, t);
      if (got != want) {
        why = "coefficient at t=(" + std::to_string(a) + "," + std::to_string(b) + ") is " +
              to_string(got);
        return false;
      }
    }
  return true;
}

Result criterion1() {
  Result r;
  const ParametricPolytope p = running_example();
  PiecewiseStepPoly c = count_parametric(p);
  check_degree(c, p.d, "running example count");
  for (long a = 0; a <= 12; ++a)
    for (long b = 0; b <= 12; ++b) {
      IntVec s = ivec({a, b});
      Rat got = eval_piecewise(c, s);
      if (got != scan_count(p, s, 0, 12))
        r.fail("count mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  auto q1 = [](const Rat& s1, const Rat& s2) -> Rat {
    Rat f = fl(s1 / 2);
    return s1 * s2 - f * s1 - s2 * s2 / 2 + s2 / 2 + f * f + f + 1;
  };
  auto q2 = [](const Rat&, const Rat& s2) -> Rat { return s2 * s2 / 2 + 3 * s2 / 2 + 1; };
  auto q3 = [](const Rat& s1, const Rat&) -> Rat {
    Rat f = fl(s1 / 2);
    return s1 * s1 / 2 - f * s1 + s1 / 2 + f * f + f + 1;
  };
  const std::vector<std::pair<bool (*)(long, long), std::function<Rat(Rat, Rat)>>> chambers = {
      {in_q1, q1}, {in_q2, q2}, {in_q3, q3}};
  for (std::size_t q = 0; q < chambers.size(); ++q) {
    auto pts = points_where(1, 40, 20, chambers[q].first);
    if (pts.size() < 20) r.fail("too few interior points");
    for (const auto& s : pts) {
      std::size_t i = c.locate(to_rat(s));
      if (i == PiecewiseStepPoly::npos || cell_dimension(c.pieces[i].cell) != 2) {
        r.fail("interior point not in a full-dimensional piece");
        continue;
      }
      if (c.pieces[i].value.eval(s) != chambers[q].second(Rat(s[0]), Rat(s[1])))
        r.fail("Q" + std::to_string(q + 1) + " formula mismatch");
    }
  }
  return r;
}

Result criterion2() {
  Result r;
  const ParametricPolytope p = running_example();
  ChamberDecomposition dec = chamber_decomposition(p);
  if (dec.vertices.size() != 6) r.fail("expected 6 parametric vertices");
  const IntVec s = ivec({3, 4});
  for (std::size_t vi = 0; vi < dec.vertices.size(); ++vi) {
    auto tight = full_dim_tight(dec, vi);
    if (!tight) {
      r.fail("vertex without a full-dimensional chamber");
      continue;
    }
    auto terms = vertex_cone_gf(vertex_cone(dec.polytope, dec.vertices[vi].map, *tight));
    std::string why;
    if (!series_matches_cone(terms, dec.polytope, *tight, s, -1, 6, why))
      r.fail("vertex " + std::to_string(vi) + ": " + why);
  }
  return r;
}

// Vertices of the running example as functions of s.
RatVec listed_vertex(int i, const Rat& s1, const Rat& s2) {
  switch (i) {
    case 1: return {0, -s1 / 2 + s2};
    case 2: return {0, 0};
    case 3: return {s1 - s2, 0};
    case 4: return {s1 - 2 * s2, 0};
    case 5: return {0, -s1 + s2};
    default: return {s1, s2};
  }
}

Rat listed_constant(int i, const Rat& s1, const Rat& s2) {
  Rat f = fl(s1 / 2);
  switch (i) {
    case 1:
      // Printed with -s2/3 in place of -s2^2/3.
      return s1 * s1 / 6 + s1 * s2 / 3 - s1 * f - s1 / 2 - s2 * s2 / 3 + f * f + f + Rat(2, 9);
    case 2: return 0;
    case 3: return -s1 * s1 / 4 + s1 * s2 / 2 - s2 * s2 / 4 + Rat(1, 8);
    case 4: return s1 * s1 / 6 - 2 * s1 * s2 / 3 - s1 / 2 + 2 * s2 * s2 / 3 + s2 + Rat(2, 9);
    case 5: return s1 * s1 / 4 - s1 * s2 / 2 + s1 / 2 + s2 * s2 / 4 - s2 / 2 + Rat(1, 8);
    default:
      return s1 * s1 / 12 + s1 * s2 / 6 + s1 / 2 + s2 * s2 / 12 + s2 / 2 + Rat(47, 72);
  }
}

// Second listed summand of v1: the term over (1-x^(1,0))(1-x^(0,1)).
Rat v1_second_term(const Rat& s1, const Rat& s2) {
  Rat f = fl(s1 / 2);
  return -f * f / 2 - s2 * s2 / 2 + f * s2 - f / 2 + s2 / 2;
}

Result criterion3() {
  Result r;
  const ParametricPolytope p = running_example();
  ChamberDecomposition dec = chamber_decomposition(p);
  // Chambers where each vertex is active.
  const std::vector<std::vector<bool (*)(long, long)>> active = {
      {in_q1, in_q3}, {in_q1}, {in_q1, in_q2}, {in_q2}, {in_q3}, {in_q1, in_q2, in_q3}};
  for (int i = 1; i <= 6; ++i) {
    std::optional<std::size_t> found;
    for (std::size_t vi = 0; vi < dec.vertices.size(); ++vi) {
      bool same = true;
      for (const auto& probe : {std::pair<long, long>{5, 3}, {7, 11}, {2, 9}})
        same = same && dec.vertices[vi].map({probe.first, probe.second}) ==
                           listed_vertex(i, probe.first, probe.second);
      if (same) found = vi;
    }
    if (!found) {
      r.fail("vertex v" + std::to_string(i) + " not found");
      continue;
    }
    auto tight = full_dim_tight(dec, *found);
    ParamGenFun f{p.n, p.d, vertex_cone_gf(vertex_cone(dec.polytope, dec.vertices[*found].map, *tight))};
    ParamGenFun g = specialize_trailing(f, ivec({1, 1}));
    StepPoly value(p.n);
    for (const auto& t : g.terms) value += t.coeff;
    if (i == 1) {
      ParamGFTerm second;
      bool found_second = false;
      for (const auto& t : f.terms)
        if (t.denoms == std::vector<IntVec>{ivec({0, 1}), ivec({1, 0})}) {
          second = t;
          found_second = true;
        }
      if (!found_second) {
        r.fail("v1 term over (1,0),(0,1) missing");
      } else {
        StepPoly part(p.n);
        for (const auto& t : specialize_term(second, p.n, ivec({1, 1}))) part += t.coeff;
        for (const auto& s : points_where(-30, 30, 50, in_q1))
          if (part.eval(s) != v1_second_term(s[0], s[1])) r.fail("v1 second summand differs");
      }
      // As printed (-s2/3), adding both lines breaks Brion's identity in Q3.
      const IntVec s = ivec({3, 4});
      Rat literal = listed_constant(1, 3, 4) + Rat(16, 3) - Rat(4, 3) + v1_second_term(3, 4) +
                    listed_constant(5, 3, 4) + listed_constant(6, 3, 4);
      if (literal == count_bruteforce(p, s)) r.fail("literal v1 sum unexpectedly consistent");
      r.note = "v1 total read with -s2^2/3";
    }
    for (auto in : active[i - 1]) {
      auto pts = points_where(-30, 30, 50, in);
      if (pts.size() < 50) r.fail("too few chamber points");
      for (const auto& s : pts)
        if (value.eval(s) != listed_constant(i, s[0], s[1]))
          r.fail("v" + std::to_string(i) + " differs at (" + to_string(s[0]) + "," +
                 to_string(s[1]) + ")");
    }
  }
  return r;
}

Result criterion4() {
  Result r;
  const ParametricPolytope p = running_example();
  ChamberDecomposition dec = chamber_decomposition(p);
  std::optional<std::size_t> v1;
  for (std::size_t vi = 0; vi < dec.vertices.size(); ++vi)
    if (dec.vertices[vi].map({4, 6}) == listed_vertex(1, 4, 6) &&
        dec.vertices[vi].map({1, 9}) == listed_vertex(1, 1, 9))
      v1 = vi;
  if (!v1) {
    r.fail("v1 not found");
    return r;
  }
  auto tight = *full_dim_tight(dec, *v1);
  VertexCone k = vertex_cone(dec.polytope, dec.vertices[*v1].map, tight);
  auto simplices = triangulate(k.normals);
  if (simplices.size() != 1) r.fail("v1 cone should already be simplicial");
  auto uni = barvinok_decompose(simplices.front());
  if (uni.size() != 2) r.fail("expected two unimodular cones, got " + std::to_string(uni.size()));
  std::vector<ParamGFTerm> terms;
  for (const auto& u : uni) terms.push_back(unimodular_gf(u, k.apex));
  for (const auto& s : {ivec({3, 4}), ivec({1, 5}), ivec({0, 2})}) {
    std::string why;
    if (!series_matches_cone(terms, dec.polytope, tight, s, -3, 8, why))
      r.fail("s=(" + to_string(s[0]) + "," + to_string(s[1]) + "): " + why);
  }
  return r;
}

Result criterion5() {
  Result r;
  auto single = [](std::vector<long> denoms) {
    GFTerm t{1, ivec({0}), {}};
    for (long b : denoms) t.denoms.push_back(ivec({b}));
    return RatGenFun{1, {t}};
  };
  struct Case {
    RatGenFun f;
    long l;
    std::function<Rat(long)> expect;
    std::string name;
  };
  std::vector<Case> cases = {
      {single({2}), -1, [](long s) { return Rat(s >= 0 && s % 2 == 0 ? 1 : 0); }, "1/(1-x^2)"},
      {single({2, 5}), -1,
       [](long s) { return s < 0 ? Rat(0) : fl(make_rat(s, 2) + 1) + fl(make_rat(-2 * s, 5)); },
       "1/((1-x^2)(1-x^5))"},
      {single({1}), 1, [](long s) { return Rat(s <= -1 ? -1 : 0); }, "1/(1-x), l=+1"}};
  for (const auto& c : cases) {
    PiecewiseStepPoly g = gf_to_step(c.f, ivec({c.l}));
    check_degree(g, c.f.k_bound(), c.name);
    for (long s = -10; s <= 40; ++s)
      if (eval_piecewise(g, ivec({s})) != c.expect(s))
        r.fail(c.name + " differs at s=" + std::to_string(s));
  }
  return r;
}

Result criterion6() {
  Result r;
  const ParametricPolytope p = dilated_square();
  PiecewiseStepPoly c = count_parametric(p);
  check_degree(c, p.d, "dilated square count");
  for (long s = 0; s <= 40; ++s) {
    Rat f = fl(make_rat(s, 2) + 1);
    if (eval_piecewise(c, ivec({s})) != f * f) r.fail("count differs at s=" + std::to_string(s));
  }
  RatGenFun g = step_to_gf(c);
  RatGenFun ref{1,
                {{2, ivec({0}), {ivec({1}), ivec({2}), ivec({2})}},
                 {-1, ivec({0}), {ivec({1}), ivec({2})}}}};
  std::vector<IntVec> denoms;
  for (const auto& t : g.terms) denoms.insert(denoms.end(), t.denoms.begin(), t.denoms.end());
  IntVec l = pick_l(supports_of(c), denoms, 1);
  for (long s = 0; s <= 20; ++s)
    if (series_coefficient(g, l, ivec({s})) != series_coefficient(ref, ivec({-1}), ivec({s})))
      r.fail("series differs at s=" + std::to_string(s));
  return r;
}

// Center of the grid: a point of some nonzero piece.
IntVec grid_center(const PiecewiseStepPoly& c) {
  for (const auto& piece : c.pieces) {
    if (piece.value.is_zero()) continue;
    if (auto x = find_point(piece.cell)) {
      IntVec out;
      for (const auto& v : *x) out.push_back(floor_of(v));
      return out;
    }
  }
  return IntVec(c.n, Int(0));
}

std::vector<IntVec> grid_100(const IntVec& center) {
  std::vector<IntVec> out;
  if (center.size() == 1) {
    for (long k = -50; k < 50; ++k) out.push_back({center[0] + k});
  } else {
    for (long a = -5; a < 5; ++a)
      for (long b = -5; b < 5; ++b) out.push_back({center[0] + a, center[1] + b});
  }
  return out;
}

Result criterion7() {
  Result r;
  std::mt19937 rng(20240607);
  // Shapes cycle through (n, d); the 2 x 2 draws keep the t-part unimodular.
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  int done = 0, rejected = 0;
  while (done < 25) {
    const auto [n, d] = shapes[static_cast<std::size_t>(done) % shapes.size()];
    ParametricPolytope p = random_polytope(rng, n, d, n == 2 && d == 2);
    PiecewiseStepPoly c = count_parametric(p);
    check_degree(c, p.d, "random count");
    // The round trip needs a nonzero function with a convergent generating
    // function: every nonzero piece line-free and a common direction l.
    RatGenFun g;
    IntVec l;
    try {
      if (supports_of(c).empty()) throw PreconditionError("zero function");
      g = step_to_gf(c);
      std::vector<IntVec> denoms;
      for (const auto& t : g.terms) denoms.insert(denoms.end(), t.denoms.begin(), t.denoms.end());
      l = pick_l(supports_of(c), denoms, p.n);
    } catch (const PreconditionError&) {
      ++rejected;
      continue;
    }
    PiecewiseStepPoly back = gf_to_step(g, l);
    check_degree(back, g.k_bound(), "random round trip");
    for (const auto& s : grid_100(grid_center(c)))
      if (eval_piecewise(back, s) != eval_piecewise(c, s)) {
        r.fail("round trip differs for polytope #" + std::to_string(done));
        break;
      }
    ++done;
  }
  // A fixed 2 x 2 instance with a non-unimodular t-part.
  {
    const ParametricPolytope p = running_example();
    PiecewiseStepPoly c = count_parametric(p);
    RatGenFun g = step_to_gf(c);
    std::vector<IntVec> denoms;
    for (const auto& t : g.terms) denoms.insert(denoms.end(), t.denoms.begin(), t.denoms.end());
    PiecewiseStepPoly back = gf_to_step(g, pick_l(supports_of(c), denoms, p.n));
    check_degree(back, g.k_bound(), "running example round trip");
    for (const auto& s : grid_100(ivec({4, 4})))
      if (eval_piecewise(back, s) != eval_piecewise(c, s)) r.fail("running example round trip differs");
  }
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(rejected) +
            " draws rejected; 2x2 draws restricted to unimodular t-part";
  return r;
}

Result criterion8() {
  Result r;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), count(1, 8), pt(-40, 40), den(1, 4);
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t m = count(rng);
      std::vector<Hyperplane> hs;
      while (hs.size() < m) {
        RatVec a(d);
        for (auto& x : a) x = coef(rng);
        if (is_zero(a)) continue;
        hs.push_back({a, Rat(coef(rng))});
      }
      auto cells = hyperplane_arrangement(hs, d);
      std::size_t full = 0;
      for (const auto& c : cells) full += cell_dimension(c) == d;
      if (Int(static_cast<long>(full)) > phi_bound(m, d)) r.fail("cell count exceeds Phi");
      for (int k = 0; k < 500; ++k) {
        RatVec x(d);
        for (auto& v : x) v = make_rat(pt(rng), den(rng));
        // Every fourth sample is pushed onto a hyperplane.
        if (k % 4 == 0) {
          const auto& h = hs[k % hs.size()];
          std::size_t j = 0;
          while (h.a[j] == 0) ++j;
          x[j] = 0;
          x[j] = (h.b - dot(h.a, x)) / h.a[j];
        }
        int hits = 0;
        for (const auto& c : cells) hits += relint_contains(c, x);
        if (hits != 1) r.fail("sample lies in " + std::to_string(hits) + " cells");
      }
    }
  }
  return r;
}

Result criterion9() {
  Result r;
  if (!degree_violations.empty()) r.fail(degree_violations.front());
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(degree_checks) + " outputs checked";
  return r;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"running example counts and chamber formulas", criterion1},
      {"vertex cone generating functions at s=(3,4)", criterion2},
      {"vertex cone constant terms", criterion3},
      {"two-cone decomposition of the v1 cone", criterion4},
      {"partition functions and expansion direction", criterion5},
      {"dilated square in both directions", criterion6},
      {"random round trips", criterion7},
      {"arrangement cell bound and partition", criterion8},
      {"degree bounds", criterion9},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto t = Clock::now();
    Result res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    all = all && res.ok;
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", index++, res.ok ? "PASS" : "FAIL",
                name.c_str(), seconds_since(t), res.note.empty() ? "" : "  ", res.note.c_str());
    std::fflush(stdout);
  }
  const double total = seconds_since(t0);
  const bool fast = total < 300;
  all = all && fast;
  std::printf("criterion 10: %s  whole suite under 5 minutes (%.2fs)\n", fast ? "PASS" : "FAIL",
              total);
  return all ? 0 : 1;
}
