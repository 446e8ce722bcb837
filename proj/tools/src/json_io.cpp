#include "latcount/json_io.hpp"

#include <sstream>

#include "latcount/error.hpp"

namespace latcount::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

void expect_size(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want)
    throw InputError(what + " has length " + std::to_string(got) + ", expected " +
                     std::to_string(want));
}

json constraint_json(const Constraint& c) { return {{"a", to_json(c.a)}, {"b", to_json(c.b)}}; }

Constraint constraint_from(const json& j, std::size_t dim) {
  Constraint c{ratvec_from_json(field(j, "a")), rat_from_json(field(j, "b"))};
  expect_size(c.a.size(), dim, "constraint normal");
  return c;
}

RatMat matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  expect_size(j.size(), rows, what);
  RatMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    RatVec r = ratvec_from_json(j[i]);
    expect_size(r.size(), cols, what + " row " + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

std::vector<ParamConstraint> rows_from(const json& j, const char* ka, const char* kb,
                                       const char* kc, std::size_t n, std::size_t d,
                                       bool optional) {
  if (optional && !j.contains(kc)) return {};
  const json& c = array_field(j, kc);
  const std::size_t m = c.size();
  RatMat a = (n == 0 && !j.contains(ka)) ? RatMat(m, 0) : matrix_from(field(j, ka), m, n, ka);
  RatMat b = matrix_from(field(j, kb), m, d, kb);
  RatVec cv = ratvec_from_json(c);
  std::vector<ParamConstraint> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back({a.row_vec(i), b.row_vec(i), cv[i]});
  return out;
}

void rows_to(json& j, const std::vector<ParamConstraint>& rows, const char* ka, const char* kb,
             const char* kc, bool with_a) {
  json a = json::array(), b = json::array(), c = json::array();
  for (const auto& r : rows) {
    a.push_back(to_json(r.a));
    b.push_back(to_json(r.b));
    c.push_back(to_json(r.c));
  }
  if (with_a) j[ka] = a;
  j[kb] = b;
  j[kc] = c;
}

}  // namespace

json to_json(const Rat& x) { return to_string(x); }
json to_json(const Int& x) { return to_string(x); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<unsigned long long>())));
  throw InputError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  throw InputError("expected an integer, got " + j.dump());
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json to_json(const Cell& c) {
  json ineqs = json::array(), eqs = json::array();
  for (std::size_t i = 0; i < c.closed.ineqs.size(); ++i) {
    json r = constraint_json(c.closed.ineqs[i]);
    r["strict"] = static_cast<bool>(c.strict[i]);
    ineqs.push_back(std::move(r));
  }
  for (const auto& e : c.closed.eqs) eqs.push_back(constraint_json(e));
  return {{"dim", c.dim()}, {"ineqs", ineqs}, {"eqs", eqs}};
}

Cell cell_from_json(const json& j) {
  const std::size_t dim = size_field(j, "dim");
  Cell c = Cell::universe(dim);
  if (j.contains("ineqs"))
    for (const auto& r : array_field(j, "ineqs")) {
      bool strict = false;
      if (r.contains("strict")) {
        if (!r["strict"].is_boolean()) throw InputError("field \"strict\" must be a boolean");
        strict = r["strict"].get<bool>();
      }
      c.add_ineq(constraint_from(r, dim), strict);
    }
  if (j.contains("eqs"))
    for (const auto& r : array_field(j, "eqs")) c.add_eq(constraint_from(r, dim));
  return c;
}

json to_json(const ParametricPolytope& p) {
  json j{{"n", p.n}, {"d", p.d}};
  rows_to(j, p.ineqs, "A", "B", "c", true);
  if (!p.eqs.empty()) rows_to(j, p.eqs, "Aeq", "Beq", "ceq", true);
  return j;
}

ParametricPolytope polytope_from_json(const json& j) {
  ParametricPolytope p;
  p.n = size_field(j, "n");
  p.d = size_field(j, "d");
  p.ineqs = rows_from(j, "A", "B", "c", p.n, p.d, false);
  p.eqs = rows_from(j, "Aeq", "Beq", "ceq", p.n, p.d, true);
  p.validate();
  return p;
}

json to_json(const Polyhedron& q) {
  ParametricPolytope p{0, q.dim, {}, {}};
  for (const auto& c : q.ineqs) p.ineqs.push_back({{}, c.a, c.b});
  for (const auto& c : q.eqs) p.eqs.push_back({{}, c.a, c.b});
  json j{{"n", 0}, {"d", q.dim}};
  rows_to(j, p.ineqs, "A", "B", "c", false);
  if (!p.eqs.empty()) rows_to(j, p.eqs, "Aeq", "Beq", "ceq", false);
  return j;
}

Polyhedron polyhedron_from_json(const json& j) {
  if (j.contains("n") && size_field(j, "n") != 0)
    throw InputError("a polyhedron has no parameters (n must be 0)");
  ParametricPolytope p;
  p.d = size_field(j, "d");
  p.ineqs = rows_from(j, "A", "B", "c", 0, p.d, false);
  p.eqs = rows_from(j, "Aeq", "Beq", "ceq", 0, p.d, true);
  Polyhedron q{p.d, {}, {}};
  for (const auto& r : p.ineqs) q.ineqs.push_back({r.b, r.c});
  for (const auto& r : p.eqs) q.eqs.push_back({r.b, r.c});
  return q;
}

json to_json(const StepPoly& g) {
  json terms = json::array();
  for (const auto& [m, c] : g.terms()) {
    json floors = json::array();
    for (const auto& f : m) floors.push_back({{"a", to_json(f.a)}, {"b", to_json(f.b)}});
    terms.push_back({{"coeff", to_json(c)}, {"floors", floors}});
  }
  return {{"terms", terms}};
}

StepPoly steppoly_from_json(const json& j, std::size_t n) {
  StepPoly g(n);
  for (const auto& t : array_field(j, "terms")) {
    StepPoly prod = StepPoly::constant(n, rat_from_json(field(t, "coeff")));
    if (t.contains("floors"))
      for (const auto& f : array_field(t, "floors")) {
        RatVec a = ratvec_from_json(field(f, "a"));
        expect_size(a.size(), n, "floor coefficient vector");
        prod = prod * StepPoly::floor_of(a, rat_from_json(field(f, "b")));
      }
    g += prod;
  }
  return g;
}

json to_json(const PiecewiseStepPoly& c) {
  json pieces = json::array();
  for (const auto& p : c.pieces)
    pieces.push_back({{"cell", to_json(p.cell)}, {"value", to_json(p.value)}});
  return {{"n", c.n}, {"pieces", pieces}};
}

PiecewiseStepPoly piecewise_from_json(const json& j) {
  PiecewiseStepPoly c;
  c.n = size_field(j, "n");
  for (const auto& p : array_field(j, "pieces")) {
    Cell cell = cell_from_json(field(p, "cell"));
    expect_size(cell.dim(), c.n, "cell dimension");
    c.pieces.push_back({std::move(cell), steppoly_from_json(field(p, "value"), c.n)});
  }
  return c;
}

json to_json(const RatGenFun& f) {
  json terms = json::array();
  for (const auto& t : f.terms) {
    json denoms = json::array();
    for (const auto& b : t.denoms) denoms.push_back(to_json(b));
    terms.push_back({{"coeff", to_json(t.coeff)}, {"num", to_json(t.num)}, {"denoms", denoms}});
  }
  return {{"n", f.n}, {"terms", terms}};
}

RatGenFun genfun_from_json(const json& j) {
  RatGenFun f;
  f.n = size_field(j, "n");
  for (const auto& t : array_field(j, "terms")) {
    GFTerm g;
    g.coeff = rat_from_json(field(t, "coeff"));
    g.num = intvec_from_json(field(t, "num"));
    if (t.contains("denoms"))
      for (const auto& b : array_field(t, "denoms")) g.denoms.push_back(intvec_from_json(b));
    std::sort(g.denoms.begin(), g.denoms.end());
    f.terms.push_back(std::move(g));
  }
  validate(f);
  return f;
}

json to_json(const ParamGenFun& f) {
  json terms = json::array();
  for (const auto& t : f.terms) {
    json num = json::array(), denoms = json::array();
    for (const auto& e : t.num) num.push_back(to_json(e));
    for (const auto& b : t.denoms) denoms.push_back(to_json(b));
    terms.push_back({{"coeff", to_json(t.coeff)}, {"num", num}, {"denoms", denoms}});
  }
  return {{"n", f.n}, {"m", f.m}, {"terms", terms}};
}

ParamGenFun param_genfun_from_json(const json& j) {
  ParamGenFun f;
  f.n = size_field(j, "n");
  f.m = size_field(j, "m");
  for (const auto& t : array_field(j, "terms")) {
    ParamGFTerm g;
    g.coeff = steppoly_from_json(field(t, "coeff"), f.n);
    for (const auto& e : array_field(t, "num")) g.num.push_back(steppoly_from_json(e, f.n));
    expect_size(g.num.size(), f.m, "numerator");
    if (t.contains("denoms"))
      for (const auto& b : array_field(t, "denoms")) {
        g.denoms.push_back(intvec_from_json(b));
        expect_size(g.denoms.back().size(), f.m, "denominator");
      }
    std::sort(g.denoms.begin(), g.denoms.end());
    f.terms.push_back(std::move(g));
  }
  return f;
}

json to_json(const ChamberDecomposition& d) {
  json verts = json::array();
  for (const auto& v : d.vertices) {
    json lin = json::array();
    for (std::size_t i = 0; i < v.map.linear.rows(); ++i) lin.push_back(to_json(v.map.linear.row_vec(i)));
    verts.push_back({{"linear", lin}, {"offset", to_json(v.map.offset)}, {"tight", v.tight}});
  }
  json chambers = json::array();
  for (const auto& c : d.chambers) {
    json cv = json::array();
    for (const auto& v : c.vertices) cv.push_back({{"vertex", v.vertex}, {"tight", v.tight}});
    chambers.push_back({{"cell", to_json(c.cell)}, {"sample", to_json(c.sample)}, {"vertices", cv}});
  }
  return {{"polytope", to_json(d.polytope)}, {"vertices", verts}, {"chambers", chambers}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace {

std::string monomial_text(const IntVec& e) {
  if (e.size() == 1) return "x^" + to_string(e[0]);
  std::string s = "x^(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + to_string(e[i]);
  return s + ")";
}

}  // namespace

std::string to_pretty(const RatGenFun& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms) {
    Rat mag = abs(t.coeff);
    if (first)
      os << (t.coeff < 0 ? "-" : "");
    else
      os << (t.coeff < 0 ? " - " : " + ");
    first = false;
    os << (mag == 1 ? "" : to_string(mag) + "*") << monomial_text(t.num);
    if (!t.denoms.empty()) {
      os << "/(";
      for (std::size_t j = 0; j < t.denoms.size(); ++j)
        os << (j ? "*" : "") << "(1 - " << monomial_text(t.denoms[j]) << ")";
      os << ")";
    }
  }
  return os.str();
}

}  // namespace latcount::io
