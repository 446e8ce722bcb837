#include "latcount/oracle.hpp"

#include <set>

#include "latcount/error.hpp"

namespace latcount {

namespace {

// Scans the bounding box coordinate by coordinate.
void scan(const Polyhedron& p, const std::pair<RatVec, RatVec>& box, IntVec& x,
          std::size_t i, std::vector<IntVec>& out) {
  if (i == p.dim) {
    if (p.contains(to_rat(x))) out.push_back(x);
    return;
  }
  for (Int v = ceil_of(box.first[i]); v <= floor_of(box.second[i]); ++v) {
    x[i] = v;
    scan(p, box, x, i + 1, out);
  }
}

}  // namespace

std::vector<IntVec> enumerate_lattice_points(const Polyhedron& p) {
  std::vector<IntVec> out;
  if (is_empty(p)) return out;
  auto box = bounding_box(p);
  if (!box) throw PreconditionError("enumerate_lattice_points: polyhedron is unbounded");
  IntVec x(p.dim);
  scan(p, *box, x, 0, out);
  return out;
}

Int count_bruteforce(const ParametricPolytope& p, const IntVec& s) {
  if (s.size() != p.n) throw InputError("parameter has wrong dimension");
  return Int(static_cast<long>(enumerate_lattice_points(p.fiber(to_rat(s))).size()));
}

namespace {

// Number of lambda >= 0 with sum_{j >= i} lambda_j b_j = r.
Int compositions(const std::vector<IntVec>& b, const std::vector<Int>& lb, const IntVec& l,
                 std::size_t i, const IntVec& r) {
  if (i == b.size()) return is_zero(r) ? Int(1) : Int(0);
  if (i + 1 == b.size()) {
    // r must be a nonnegative multiple of b_i.
    Int k = -1;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (b[i][c] == 0) {
        if (r[c] != 0) return 0;
        continue;
      }
      if (r[c] % b[i][c] != 0) return 0;
      Int q = r[c] / b[i][c];
      if (q < 0 || (k >= 0 && q != k)) return 0;
      k = q;
    }
    return 1;
  }
  Int total = 0;
  IntVec cur = r;
  Int ip = dot(l, cur);
  while (ip <= 0) {
    total += compositions(b, lb, l, i + 1, cur);
    cur = cur - b[i];
    ip -= lb[i];
  }
  return total;
}

}  // namespace

Rat series_coefficient(const RatGenFun& f, const IntVec& l, const IntVec& s) {
  validate(f);
  if (s.size() != f.n) throw InputError("point has wrong dimension");
  RatGenFun g = orient_to_l(f, l);
  Rat total = 0;
  for (const auto& t : g.terms) {
    std::vector<Int> lb;
    for (const auto& b : t.denoms) lb.push_back(dot(l, b));
    Int c = compositions(t.denoms, lb, l, 0, s - t.num);
    if (c != 0) total += t.coeff * c;
  }
  return total;
}

Int count_projection_bruteforce(const Polyhedron& p, std::size_t d, const IntVec& s) {
  const std::size_t n = s.size();
  if (n + d > p.dim) throw InputError("count_projection_bruteforce: dimensions do not fit");
  const std::size_t rest = p.dim - n;
  auto restrict = [&](const Constraint& c) {
    Constraint r{RatVec(c.a.begin() + static_cast<std::ptrdiff_t>(n), c.a.end()), c.b};
    for (std::size_t i = 0; i < n; ++i) r.b -= c.a[i] * s[i];
    return r;
  };
  Polyhedron fiber{rest, {}, {}};
  for (const auto& c : p.ineqs) fiber.ineqs.push_back(restrict(c));
  for (const auto& c : p.eqs) fiber.eqs.push_back(restrict(c));
  std::set<IntVec> ts;
  for (const auto& x : enumerate_lattice_points(fiber))
    ts.insert(IntVec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(d)));
  return Int(static_cast<long>(ts.size()));
}

}  // namespace latcount
