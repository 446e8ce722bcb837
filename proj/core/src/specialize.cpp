#include "latcount/specialize.hpp"

#include <algorithm>

#include "latcount/error.hpp"

namespace latcount {

TruncSeries taylor_divide(const TruncSeries& p, const TruncSeries& q, std::size_t order) {
  if (q.empty() || q[0] == 0)
    throw PreconditionError("taylor_divide: constant coefficient of the divisor is zero");
  TruncSeries c(order, Rat(0));
  for (std::size_t j = 0; j < order; ++j) {
    Rat a = j < p.size() ? p[j] : Rat(0);
    for (std::size_t i = 1; i <= j && i < q.size(); ++i) a -= q[i] * c[j - i];
    c[j] = a / q[0];
  }
  return c;
}

namespace {

TruncSeries mul(const TruncSeries& a, const TruncSeries& b, std::size_t order) {
  TruncSeries c(order, Rat(0));
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Generalized binomial coefficient C(v, i) for integer v.
Rat binom(const Int& v, std::size_t i) {
  Rat r = 1;
  for (std::size_t j = 0; j < i; ++j) r = r * Rat(v - static_cast<long>(j)) / static_cast<long>(j + 1);
  return r;
}

// Ring helpers for the two coefficient rings.
std::vector<Rat> binomials(const Int& q, std::size_t r, std::size_t) {
  std::vector<Rat> b;
  for (std::size_t i = 0; i <= r; ++i) b.push_back(binom(q, i));
  return b;
}

std::vector<StepPoly> binomials(const StepPoly& q, std::size_t r, std::size_t n) {
  std::vector<StepPoly> b{StepPoly::constant(n, 1)};
  for (std::size_t i = 1; i <= r; ++i) {
    StepPoly f = q - StepPoly::constant(n, Rat(static_cast<long>(i - 1)));
    b.push_back(b.back() * f * Rat(1, static_cast<long>(i)));
  }
  return b;
}

Int zero_of(const Int&, std::size_t) { return 0; }
Rat zero_of(const Rat&, std::size_t) { return 0; }
StepPoly zero_of(const StepPoly&, std::size_t n) { return StepPoly(n); }
Rat times(const Rat& a, const Rat& b) { return a * b; }
StepPoly times(const StepPoly& a, const StepPoly& b) { return a * b; }
bool is_nil(const Rat& a) { return a == 0; }
bool is_nil(const StepPoly& a) { return a.is_zero(); }
Int scaled_int(const Int& e, const Int& k) { return e * k; }
StepPoly scaled_int(const StepPoly& e, const Int& k) { return e * Rat(k); }
Int plus_int(const Int& e, const Int& k) { return e + k; }
StepPoly plus_int(const StepPoly& e, const Int& k) {
  return e + StepPoly::constant(e.n(), Rat(k));
}

template <class C, class E>
struct Term {
  C coeff;
  std::vector<E> num;
  std::vector<IntVec> denoms;
};

template <class C, class E>
void specialize_into(const C& coeff, const std::vector<E>& num,
                     const std::vector<IntVec>& denoms, const IntVec& lambda,
                     std::size_t n, std::vector<Term<C, E>>& out) {
  const std::size_t m = num.size();
  const std::size_t k = lambda.size();
  if (k > m) throw InputError("specialize: more substituted variables than tracked ones");
  const std::size_t keep = m - k;

  std::vector<Int> poles;
  std::vector<IntVec> surv_b;
  std::vector<Int> surv_v;
  for (const auto& b : denoms) {
    IntVec head(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(keep));
    Int v = 0;
    for (std::size_t i = 0; i < k; ++i) v += lambda[i] * b[keep + i];
    if (is_zero(head)) {
      if (v == 0)
        throw PreconditionError("specialize: denominator vanishes identically under the substitution");
      poles.push_back(v);
    } else {
      surv_b.push_back(std::move(head));
      surv_v.push_back(v);
    }
  }
  const std::size_t r = poles.size();
  const std::size_t order = r + 1;

  // prod over poles of t / (1 - (1+t)^v)
  TruncSeries pi(order, Rat(0));
  pi[0] = 1;
  for (const auto& v : poles) {
    TruncSeries den(order);
    for (std::size_t i = 0; i < order; ++i) den[i] = -binom(v, i + 1);
    TruncSeries one(order, Rat(0));
    one[0] = 1;
    pi = mul(pi, taylor_divide(one, den, order), order);
  }

  E q = zero_of(num.front(), n);
  for (std::size_t i = 0; i < k; ++i) q = q + scaled_int(num[keep + i], lambda[i]);
  auto bq = binomials(q, r, n);

  // Powers of (1+t)^v - 1 for each survivor.
  const std::size_t ns = surv_b.size();
  std::vector<std::vector<TruncSeries>> pw(ns);
  for (std::size_t j = 0; j < ns; ++j) {
    TruncSeries base(order, Rat(0));
    for (std::size_t i = 1; i < order; ++i) base[i] = binom(surv_v[j], i);
    TruncSeries cur(order, Rat(0));
    cur[0] = 1;
    pw[j].push_back(cur);
    for (std::size_t e = 1; e <= r; ++e) {
      cur = mul(cur, base, order);
      pw[j].push_back(cur);
    }
  }

  std::vector<std::size_t> kv(ns, 0);
  auto emit = [&] {
    TruncSeries gamma = pi;
    for (std::size_t j = 0; j < ns; ++j)
      if (kv[j] > 0) gamma = mul(gamma, pw[j][kv[j]], order);
    C c = zero_of(bq[0], n);
    for (std::size_t i = 0; i <= r; ++i)
      if (gamma[r - i] != 0) c = c + bq[i] * gamma[r - i];
    if (is_nil(c)) return;
    Term<C, E> t;
    t.coeff = times(coeff, c);
    if (is_nil(t.coeff)) return;
    t.num.assign(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(keep));
    for (std::size_t j = 0; j < ns; ++j)
      for (std::size_t i = 0; i < keep; ++i)
        if (kv[j] > 0 && surv_b[j][i] != 0)
          t.num[i] = plus_int(t.num[i], surv_b[j][i] * static_cast<long>(kv[j]));
    for (std::size_t j = 0; j < ns; ++j)
      for (std::size_t e = 0; e <= kv[j]; ++e) t.denoms.push_back(surv_b[j]);
    std::sort(t.denoms.begin(), t.denoms.end());
    out.push_back(std::move(t));
  };
  // Enumerate exponent tuples with total at most r; survivors with v = 0
  // contribute only at exponent 0.
  auto rec = [&](auto&& self, std::size_t j, std::size_t left) -> void {
    if (j == ns) {
      emit();
      return;
    }
    const std::size_t top = surv_v[j] == 0 ? 0 : left;
    for (std::size_t e = 0; e <= top; ++e) {
      kv[j] = e;
      self(self, j + 1, left - e);
    }
    kv[j] = 0;
  };
  rec(rec, 0, r);
}

}  // namespace

std::vector<ParamGFTerm> specialize_term(const ParamGFTerm& t, std::size_t n,
                                         const IntVec& lambda) {
  std::vector<Term<StepPoly, StepPoly>> tmp;
  if (t.num.empty()) {
    if (!lambda.empty()) throw InputError("specialize: no tracked variables left");
    return {t};
  }
  specialize_into(t.coeff, t.num, t.denoms, lambda, n, tmp);
  std::vector<ParamGFTerm> out;
  out.reserve(tmp.size());
  for (auto& x : tmp) out.push_back({std::move(x.coeff), std::move(x.num), std::move(x.denoms)});
  return out;
}

std::vector<GFTerm> specialize_term(const GFTerm& t, const IntVec& lambda) {
  if (t.num.empty()) {
    if (!lambda.empty()) throw InputError("specialize: no tracked variables left");
    return {t};
  }
  std::vector<Term<Rat, Int>> tmp;
  specialize_into(t.coeff, t.num, t.denoms, lambda, 0, tmp);
  std::vector<GFTerm> out;
  out.reserve(tmp.size());
  for (auto& x : tmp) out.push_back({std::move(x.coeff), std::move(x.num), std::move(x.denoms)});
  return out;
}

ParamGenFun specialize_trailing(const ParamGenFun& f, const IntVec& lambda) {
  if (lambda.size() > f.m) throw InputError("specialize: too many variables");
  ParamGenFun out{f.n, f.m - lambda.size(), {}};
  for (const auto& t : f.terms)
    for (auto& x : specialize_term(t, f.n, lambda)) out.terms.push_back(std::move(x));
  out.normalize();
  return out;
}

ParamGenFun specialize_last(const ParamGenFun& f) {
  if (f.m == 0) throw InputError("specialize_last: no tracked variables");
  return specialize_trailing(f, IntVec{1});
}

StepPoly specialize_to_constant(const ParamGenFun& f) {
  ParamGenFun g = f;
  while (g.m > 0) g = specialize_last(g);
  StepPoly total(f.n);
  for (const auto& t : g.terms) total += t.coeff;
  return total;
}

RatGenFun specialize_last_k(const RatGenFun& f, std::size_t k) {
  if (k > f.n) throw InputError("specialize: too many variables");
  RatGenFun g = f;
  for (std::size_t step = 0; step < k; ++step) {
    RatGenFun next{g.n - 1, {}};
    for (const auto& t : g.terms)
      for (auto& x : specialize_term(t, IntVec{1})) next.terms.push_back(std::move(x));
    next.normalize();
    g = std::move(next);
  }
  return g;
}

}  // namespace latcount
