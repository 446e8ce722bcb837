#include "latcount/genfun.hpp"

#include <algorithm>
#include <map>

#include "latcount/error.hpp"

namespace latcount {

std::size_t RatGenFun::k_bound() const {
  std::size_t k = 0;
  for (const auto& t : terms) k = std::max(k, t.denoms.size());
  return k;
}

void RatGenFun::normalize() {
  std::map<std::pair<IntVec, std::vector<IntVec>>, Rat> acc;
  for (auto& t : terms) {
    std::sort(t.denoms.begin(), t.denoms.end());
    acc[{t.num, t.denoms}] += t.coeff;
  }
  terms.clear();
  for (auto& [key, c] : acc)
    if (c != 0) terms.push_back({c, key.first, key.second});
}

void validate(const RatGenFun& f) {
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    if (t.num.size() != f.n)
      throw InputError("term " + std::to_string(i) + ": numerator has wrong dimension");
    for (std::size_t j = 0; j < t.denoms.size(); ++j) {
      if (t.denoms[j].size() != f.n)
        throw InputError("term " + std::to_string(i) + ", denominator " +
                         std::to_string(j) + ": wrong dimension");
      if (is_zero(t.denoms[j]))
        throw InputError("term " + std::to_string(i) + ", denominator " +
                         std::to_string(j) + ": zero vector");
    }
  }
}

GFTerm flip_denominator(const GFTerm& t, std::size_t j) {
  if (j >= t.denoms.size()) throw InputError("flip_denominator: index out of range");
  GFTerm out = t;
  out.coeff = -t.coeff;
  out.num = t.num - t.denoms[j];
  out.denoms[j] = -t.denoms[j];
  std::sort(out.denoms.begin(), out.denoms.end());
  return out;
}

GFTerm orient_to_l(const GFTerm& t, const IntVec& l, std::size_t term_index) {
  GFTerm out = t;
  for (std::size_t j = 0; j < out.denoms.size(); ++j) {
    Int ip = dot(l, out.denoms[j]);
    if (ip == 0) {
      std::string b;
      for (std::size_t k = 0; k < t.denoms[j].size(); ++k)
        b += (k ? "," : "") + to_string(t.denoms[j][k]);
      throw PreconditionError("<l, b> = 0 for term " + std::to_string(term_index) +
                              ", denominator " + std::to_string(j) + " b = (" + b + ")");
    }
    if (ip > 0) {
      out.coeff = -out.coeff;
      out.num = out.num - out.denoms[j];
      out.denoms[j] = -out.denoms[j];
    }
  }
  std::sort(out.denoms.begin(), out.denoms.end());
  return out;
}

RatGenFun orient_to_l(const RatGenFun& f, const IntVec& l) {
  if (l.size() != f.n) throw InputError("l has wrong dimension");
  RatGenFun out{f.n, {}};
  for (std::size_t i = 0; i < f.terms.size(); ++i)
    out.terms.push_back(orient_to_l(f.terms[i], l, i));
  return out;
}

namespace {

Rat monomial(const RatVec& x, const IntVec& e) {
  Rat v = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (e[i] == 0) continue;
    if (x[i] == 0) throw PreconditionError("evaluate: zero coordinate");
    long k = to_i64(abs(e[i]));
    Rat p;
    mpz_pow_ui(p.get_num_mpz_t(), x[i].get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(p.get_den_mpz_t(), x[i].get_den_mpz_t(), static_cast<unsigned long>(k));
    p.canonicalize();
    v *= e[i] > 0 ? p : 1 / p;
  }
  return v;
}

}  // namespace

Rat evaluate(const RatGenFun& f, const RatVec& x) {
  if (x.size() != f.n) throw InputError("evaluate: point has wrong dimension");
  Rat total = 0;
  for (const auto& t : f.terms) {
    Rat v = t.coeff * monomial(x, t.num);
    for (const auto& b : t.denoms) {
      Rat den = 1 - monomial(x, b);
      if (den == 0) throw PreconditionError("evaluate: point is a pole");
      v /= den;
    }
    total += v;
  }
  return total;
}

namespace {

struct ParamKeyLess {
  bool operator()(const std::pair<std::vector<StepPoly>, std::vector<IntVec>>& x,
                  const std::pair<std::vector<StepPoly>, std::vector<IntVec>>& y) const {
    if (x.second != y.second) return x.second < y.second;
    for (std::size_t i = 0; i < x.first.size(); ++i) {
      const auto& a = x.first[i].terms();
      const auto& b = y.first[i].terms();
      if (a != b) return a < b;
    }
    return false;
  }
};

}  // namespace

void ParamGenFun::normalize() {
  std::map<std::pair<std::vector<StepPoly>, std::vector<IntVec>>, StepPoly, ParamKeyLess> acc;
  std::vector<const std::pair<const std::pair<std::vector<StepPoly>, std::vector<IntVec>>,
                              StepPoly>*>
      order;
  for (auto& t : terms) {
    std::sort(t.denoms.begin(), t.denoms.end());
    auto [it, inserted] = acc.try_emplace({t.num, t.denoms}, StepPoly(n));
    it->second += t.coeff;
    if (inserted) order.push_back(&*it);
  }
  // First-occurrence order keeps output stable relative to the input.
  std::vector<ParamGFTerm> out;
  for (const auto* e : order)
    if (!e->second.is_zero()) out.push_back({e->second, e->first.first, e->first.second});
  terms = std::move(out);
}

RatGenFun instantiate(const ParamGenFun& f, const IntVec& s) {
  if (s.size() != f.n) throw InputError("instantiate: parameter has wrong dimension");
  RatGenFun out{f.m, {}};
  for (const auto& t : f.terms) {
    GFTerm g;
    g.coeff = t.coeff.eval(s);
    if (g.coeff == 0) continue;
    for (const auto& e : t.num) {
      Rat v = e.eval(s);
      if (!is_integer(v))
        throw PreconditionError("instantiate: exponent " + to_string(v) + " is not an integer");
      g.num.push_back(v.get_num());
    }
    g.denoms = t.denoms;
    out.terms.push_back(std::move(g));
  }
  return out;
}

ParamGenFun to_param(const RatGenFun& f) {
  ParamGenFun out{0, f.n, {}};
  for (const auto& t : f.terms) {
    ParamGFTerm p{StepPoly::constant(0, t.coeff), {}, t.denoms};
    for (const auto& e : t.num) p.num.push_back(StepPoly::constant(0, Rat(e)));
    out.terms.push_back(std::move(p));
  }
  return out;
}

RatGenFun from_param(const ParamGenFun& f) {
  if (f.n != 0) throw InputError("from_param: generating function depends on parameters");
  return instantiate(f, {});
}

}  // namespace latcount
