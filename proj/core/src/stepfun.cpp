#include "latcount/stepfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "latcount/arrangement.hpp"
#include "latcount/error.hpp"
#include "latcount/lp.hpp"

namespace latcount {

Rat FloorForm::value(const IntVec& s) const {
  if (s.size() != a.size()) throw InputError("point has wrong dimension");
  Rat v = b;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v += a[i] * s[i];
  return Rat(floor_of(v));
}

bool FloorForm::is_coordinate() const {
  if (b != 0) return false;
  int ones = 0;
  for (const auto& x : a) {
    if (x == 1)
      ++ones;
    else if (x != 0)
      return false;
  }
  return ones == 1;
}

bool operator<(const FloorForm& x, const FloorForm& y) {
  // Coordinates first, then genuine floors, each lexicographic.
  const bool cx = x.is_coordinate(), cy = y.is_coordinate();
  if (cx != cy) return cx;
  if (x.a != y.a) return x.a > y.a;
  return x.b < y.b;
}

StepPoly StepPoly::constant(std::size_t n, const Rat& c) {
  StepPoly p(n);
  p.add_term({}, c);
  return p;
}

StepPoly StepPoly::coordinate(std::size_t n, std::size_t i) {
  StepPoly p(n);
  RatVec e(n, Rat(0));
  e[i] = 1;
  p.add_term({FloorForm{std::move(e), 0}}, 1);
  return p;
}

StepPoly StepPoly::affine(const RatVec& a, const Rat& b) {
  const std::size_t n = a.size();
  StepPoly p = constant(n, b);
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0) p += coordinate(n, i) * a[i];
  return p;
}

StepPoly StepPoly::floor_of(const RatVec& a, const Rat& b) {
  const std::size_t n = a.size();
  RatVec whole(n), frac(n);
  bool has_frac = false;
  for (std::size_t i = 0; i < n; ++i) {
    whole[i] = latcount::floor_of(a[i]);
    frac[i] = a[i] - whole[i];
    has_frac = has_frac || frac[i] != 0;
  }
  Int bw = latcount::floor_of(b);
  StepPoly p = affine(whole, Rat(bw));
  if (has_frac) p.add_term({FloorForm{std::move(frac), b - bw}}, 1);
  return p;
}

void StepPoly::add_term(Monomial m, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t StepPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

bool StepPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat StepPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat StepPoly::eval(const IntVec& s) const {
  if (s.size() != n_) throw InputError("point has wrong dimension");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat prod = c;
    for (const auto& f : m) {
      prod *= f.value(s);
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

bool StepPoly::is_integer_valued_linear() const {
  for (const auto& [m, c] : terms_)
    if (m.size() > 1 || !is_integer(c)) return false;
  return true;
}

StepPoly& StepPoly::operator+=(const StepPoly& o) {
  if (n_ != o.n_ && !o.terms_.empty()) {
    if (terms_.empty())
      n_ = o.n_;
    else
      throw InputError("step-polynomials over different parameter dimensions");
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

StepPoly& StepPoly::operator-=(const StepPoly& o) {
  return *this += o * Rat(-1);
}

StepPoly& StepPoly::operator*=(const Rat& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

StepPoly operator*(const StepPoly& a, const StepPoly& b) {
  StepPoly out(a.n_ == 0 ? b.n_ : a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      StepPoly::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

StepPoly shifted(const StepPoly& g, const IntVec& p) {
  const std::size_t n = g.n();
  if (p.size() != n) throw InputError("shift has wrong dimension");
  StepPoly out(n);
  for (const auto& [m, c] : g.terms()) {
    StepPoly prod = StepPoly::constant(n, c);
    for (const auto& f : m)
      prod = prod * StepPoly::floor_of(f.a, f.b - dot(f.a, p));
    out += prod;
  }
  return out;
}

namespace {

std::string affine_text(const RatVec& a, const Rat& b) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat mag = abs(a[i]);
    if (!first) os << (a[i] < 0 ? " - " : " + ");
    else if (a[i] < 0) os << "-";
    if (mag != 1) os << to_string(mag) << "*";
    os << "s" << (i + 1);
    first = false;
  }
  if (b != 0 || first) {
    if (!first) os << (b < 0 ? " - " : " + ") << to_string(abs(b));
    else os << to_string(b);
  }
  return os.str();
}

std::string factor_text(const FloorForm& f) {
  if (f.is_coordinate()) {
    for (std::size_t i = 0; i < f.a.size(); ++i)
      if (f.a[i] == 1) return "s" + std::to_string(i + 1);
  }
  return "floor(" + affine_text(f.a, f.b) + ")";
}

}  // namespace

std::string to_pretty(const StepPoly& g) {
  if (g.is_zero()) return "0";
  // Highest degree first, for readability.
  std::vector<std::pair<const StepPoly::Monomial*, Rat>> order;
  for (const auto& [m, c] : g.terms()) order.emplace_back(&m, c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first->size() > y.first->size();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : order) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < m->size();) {
      std::size_t j = i;
      while (j < m->size() && (*m)[j] == (*m)[i]) ++j;
      std::string f = factor_text((*m)[i]);
      if (j - i > 1) f += "^" + std::to_string(j - i);
      parts.push_back(std::move(f));
      i = j;
    }
    if (parts.empty() || mag != 1) parts.insert(parts.begin(), to_string(mag));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

std::size_t PiecewiseStepPoly::degree() const {
  std::size_t d = 0;
  for (const auto& p : pieces) d = std::max(d, p.value.degree());
  return d;
}

std::size_t PiecewiseStepPoly::locate(const RatVec& s) const {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (relint_contains(pieces[i].cell, s)) return i;
  return npos;
}

Rat eval_piecewise(const PiecewiseStepPoly& c, const IntVec& s) {
  if (s.size() != c.n) throw InputError("point has wrong dimension");
  std::size_t i = c.locate(to_rat(s));
  if (i == PiecewiseStepPoly::npos) {
    std::string pt;
    for (std::size_t j = 0; j < s.size(); ++j) pt += (j ? "," : "") + to_string(s[j]);
    throw PreconditionError("no piece contains the point (" + pt + ")");
  }
  return c.pieces[i].value.eval(s);
}

namespace {

// Bounds on <u, x> over a cell, per primitive direction u; nullopt means
// unbounded. Inherited bounds are outer bounds until recomputed.
struct Range {
  std::optional<Rat> lo, hi;
  bool exact = false;
};

enum class Relation { inside, outside, unknown };

struct RefinedCell {
  Cell cell;
  RatVec point;  // lies in the cell's region
  StepPoly value;
  std::map<RatVec, Range> ranges;

  RefinedCell child(Cell c, RatVec x, StepPoly v) const {
    RefinedCell out{std::move(c), std::move(x), std::move(v), ranges};
    for (auto& [u, r] : out.ranges) r.exact = false;
    return out;
  }

  // Whether the whole cell satisfies (inside) or violates (outside) one
  // constraint of a piece.
  Relation relation(const Constraint& c, bool strict, bool eq) {
    Rat k = 0;
    for (const auto& x : c.a)
      if (x != 0) {
        k = x < 0 ? Rat(-x) : x;
        break;
      }
    RatVec u = scaled(c.a, Rat(1 / k));
    const Rat b = c.b / k;
    auto it = ranges.find(u);
    if (it != ranges.end()) {
      Relation rel = decide(it->second, b, strict, eq);
      if (rel != Relation::unknown || it->second.exact) return rel;
    }
    Range r;
    r.exact = true;
    LpResult up = lp_maximize(cell.closed, u);
    if (up.status == LpStatus::optimal) r.hi = up.value;
    LpResult down = lp_minimize(cell.closed, u);
    if (down.status == LpStatus::optimal) r.lo = down.value;
    Relation rel = decide(r, b, strict, eq);
    ranges.insert_or_assign(std::move(u), std::move(r));
    return rel;
  }

  static Relation decide(const Range& g, const Rat& b, bool strict, bool eq) {
    if (eq) {
      if (g.lo && g.hi && *g.lo == b && *g.hi == b) return Relation::inside;
      if ((g.lo && *g.lo > b) || (g.hi && *g.hi < b)) return Relation::outside;
      return Relation::unknown;
    }
    if (g.hi && (*g.hi < b || (!strict && *g.hi == b))) return Relation::inside;
    if (g.lo && (*g.lo > b || (strict && *g.lo == b))) return Relation::outside;
    return Relation::unknown;
  }
};

}  // namespace

PiecewiseStepPoly sum_piecewise(const std::vector<PiecewiseStepPoly>& cs) {
  if (cs.empty()) return PiecewiseStepPoly{};
  const std::size_t n = cs.front().n;
  for (const auto& c : cs)
    if (c.n != n) throw InputError("sum_piecewise: dimensions differ");

  // Common refinement, one summand at a time: a cell is split only where it
  // meets more than one piece of the summand with a nonzero value among them.
  std::vector<RefinedCell> cells;
  cells.push_back({Cell::universe(n), RatVec(n, Rat(0)), StepPoly(n), {}});
  for (const auto& c : cs) {
    std::vector<RefinedCell> next;
    next.reserve(cells.size());
    for (auto& r : cells) {
      // Usual case: the piece holding the sample point holds the whole cell.
      const std::size_t home = c.locate(r.point);
      if (home == PiecewiseStepPoly::npos) throw InputError("sum_piecewise: pieces do not cover");
      {
        const Cell& pc = c.pieces[home].cell;
        bool inside = true;
        for (std::size_t i = 0; i < pc.closed.ineqs.size() && inside; ++i)
          inside = r.relation(pc.closed.ineqs[i], pc.strict[i], false) == Relation::inside;
        for (std::size_t i = 0; i < pc.closed.eqs.size() && inside; ++i)
          inside = r.relation(pc.closed.eqs[i], false, true) == Relation::inside;
        if (inside) {
          r.value += c.pieces[home].value;
          next.push_back(std::move(r));
          continue;
        }
      }
      // Pieces of c meeting r, with the constraints r does not already imply.
      struct Meet {
        std::size_t piece;
        Cell extra;
        RatVec point;
      };
      std::vector<Meet> meets;
      bool all_zero = true;
      for (std::size_t pi = 0; pi < c.pieces.size(); ++pi) {
        const Cell& pc = c.pieces[pi].cell;
        Cell extra = Cell::universe(n);
        bool outside = false;
        for (std::size_t i = 0; i < pc.closed.ineqs.size() && !outside; ++i) {
          Relation rel = r.relation(pc.closed.ineqs[i], pc.strict[i], false);
          if (rel == Relation::outside) outside = true;
          if (rel == Relation::unknown) extra.add_ineq(pc.closed.ineqs[i], pc.strict[i]);
        }
        for (std::size_t i = 0; i < pc.closed.eqs.size() && !outside; ++i) {
          Relation rel = r.relation(pc.closed.eqs[i], false, true);
          if (rel == Relation::outside) outside = true;
          if (rel == Relation::unknown) extra.add_eq(pc.closed.eqs[i]);
        }
        if (outside) continue;
        if (extra.closed.ineqs.empty() && extra.closed.eqs.empty()) {
          meets.assign(1, {pi, std::move(extra), r.point});
          all_zero = c.pieces[pi].value.is_zero();
          break;
        }
        Cell both = r.cell;
        for (std::size_t i = 0; i < extra.closed.ineqs.size(); ++i)
          both.add_ineq(extra.closed.ineqs[i], extra.strict[i]);
        for (const auto& e : extra.closed.eqs) both.add_eq(e);
        auto x = find_point(both);
        if (!x) continue;
        meets.push_back({pi, std::move(extra), std::move(*x)});
        all_zero = all_zero && c.pieces[pi].value.is_zero();
      }
      if (meets.size() == 1 || all_zero) {
        if (meets.size() == 1) r.value += c.pieces[meets.front().piece].value;
        next.push_back(std::move(r));
        continue;
      }
      for (auto& [pi, extra, x] : meets) {
        RefinedCell child = r.child(r.cell, std::move(x), r.value + c.pieces[pi].value);
        for (std::size_t i = 0; i < extra.closed.ineqs.size(); ++i)
          child.cell.add_ineq(extra.closed.ineqs[i], extra.strict[i]);
        for (auto& e : extra.closed.eqs) child.cell.add_eq(std::move(e));
        next.push_back(std::move(child));
      }
    }
    cells = std::move(next);
  }

  PiecewiseStepPoly out{n, {}};
  out.pieces.reserve(cells.size());
  for (auto& r : cells) out.pieces.push_back({std::move(r.cell), std::move(r.value)});
  return out;
}

PiecewiseStepPoly multiply(const PiecewiseStepPoly& c, const StepPoly& g) {
  PiecewiseStepPoly out{c.n, {}};
  for (const auto& p : c.pieces) out.pieces.push_back({p.cell, p.value * g});
  return out;
}

PiecewiseStepPoly shifted(const PiecewiseStepPoly& c, const IntVec& p) {
  if (p.size() != c.n) throw InputError("shift has wrong dimension");
  PiecewiseStepPoly out{c.n, {}};
  for (const auto& piece : c.pieces) {
    Cell cell = piece.cell;
    for (auto& h : cell.closed.ineqs) h.b += dot(h.a, p);
    for (auto& h : cell.closed.eqs) h.b += dot(h.a, p);
    out.pieces.push_back({std::move(cell), shifted(piece.value, p)});
  }
  return out;
}

std::string to_pretty(const PiecewiseStepPoly& c) {
  std::ostringstream os;
  for (const auto& p : c.pieces) {
    os << "{";
    bool first = true;
    const auto& q = p.cell.closed;
    for (std::size_t i = 0; i < q.ineqs.size(); ++i) {
      os << (first ? "" : ", ") << affine_text(q.ineqs[i].a, 0)
         << (p.cell.strict[i] ? " < " : " <= ") << to_string(q.ineqs[i].b);
      first = false;
    }
    for (const auto& e : q.eqs) {
      os << (first ? "" : ", ") << affine_text(e.a, 0) << " = " << to_string(e.b);
      first = false;
    }
    os << "}: " << to_pretty(p.value) << "\n";
  }
  return os.str();
}

}  // namespace latcount
