#include "latcount/linalg.hpp"

#include <algorithm>

#include "latcount/error.hpp"

namespace latcount {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)))
        throw PreconditionError("expected an integer matrix entry, got " +
                                to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Rat dot(const RatVec& a, const IntVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive_direction(const RatVec& v) {
  Int den = common_denominator(v);
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Rat(x * den).get_num());
  return primitive(out);
}

RatMat rref(const RatMat& a, std::vector<std::size_t>* pivots) {
  RatMat m = a;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && m(p, j) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rat inv = 1 / m(r, j);
    for (std::size_t k = j; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, j) == 0) continue;
      Rat f = m(i, j);
      for (std::size_t k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    if (pivots) pivots->push_back(j);
    ++r;
  }
  return m;
}

std::size_t rank(const RatMat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::optional<LinearSolution> solve_rational_system(const RatMat& a,
                                                    const RatVec& b) {
  if (a.rows() != b.size())
    throw InputError("solve_rational_system: row count does not match rhs");
  const std::size_t n = a.cols();
  RatMat aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    is_pivot[piv[i]] = true;
    sol.particular[piv[i]] = r(i, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

Rat determinant(const RatMat& a) {
  if (a.rows() != a.cols())
    throw InputError("determinant of a non-square matrix");
  RatMat m = a;
  Rat det = 1;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && m(p, j) == 0) ++p;
    if (p == n) return 0;
    if (p != j) {
      m.swap_rows(p, j);
      det = -det;
    }
    det *= m(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m(i, j) == 0) continue;
      Rat f = m(i, j) / m(j, j);
      for (std::size_t k = j; k < n; ++k) m(i, k) -= f * m(j, k);
    }
  }
  return det;
}

Int determinant(const IntMat& a) {
  Rat d = determinant(to_rat(a));
  return d.get_num();
}

std::optional<RatMat> inverse(const RatMat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

namespace {

// Replaces rows (r, i) by a unimodular combination so that column j of row i
// becomes zero and row r holds gcd(a(r,j), a(i,j)).
void combine_rows(IntMat& m, IntMat& u, std::size_t r, std::size_t i,
                  std::size_t j) {
  Int a = m(r, j), b = m(i, j);
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  Int ag = a / g, bg = b / g;
  auto mix = [&](IntMat& x) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      Int xr = x(r, k), xi = x(i, k);
      x(r, k) = s * xr + t * xi;
      x(i, k) = -bg * xr + ag * xi;
    }
  };
  mix(m);
  mix(u);
}

}  // namespace

HermiteForm upper_hermite_form(const IntMat& a) {
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, j) != 0) combine_rows(h, u, r, i, j);
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      for (std::size_t k = 0; k < h.cols(); ++k) h(r, k) = -h(r, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(r, k) = -u(r, k);
    }
    const Int p = h(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) -= q * h(r, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) -= q * u(r, k);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

namespace {

IntMat reversed(const IntMat& a) {
  IntMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = a(a.rows() - 1 - i, a.cols() - 1 - j);
  return r;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMat& a) {
  // Reversing rows and columns maps the upper convention onto the lower one.
  HermiteForm up = upper_hermite_form(reversed(a));
  return {reversed(up.h), reversed(up.u)};
}

ColumnHermite column_hermite_form(const IntMat& a) {
  HermiteForm up = upper_hermite_form(a.transpose());
  ColumnHermite out;
  out.h = up.h.transpose();
  out.v = up.u.transpose();
  for (std::size_t j = 0; j < out.h.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < out.h.rows(); ++i)
      if (out.h(i, j) != 0) nonzero = true;
    if (nonzero) out.rank = j + 1;
  }
  return out;
}

std::vector<RatVec> lll_reduce_rational(std::vector<RatVec> b) {
  const std::size_t k = b.size();
  if (k == 0) return b;
  const std::size_t n = b[0].size();
  {
    RatMat m(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = b[i][j];
    if (rank(m) != k)
      throw PreconditionError("lll_reduce: basis vectors are dependent");
  }
  const Rat delta(3, 4);
  const Rat half(1, 2);

  std::vector<RatVec> bstar(k);
  std::vector<Rat> norm(k);
  std::vector<std::vector<Rat>> mu(k, std::vector<Rat>(k, Rat(0)));
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      bstar[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], bstar[j]) / norm[j];
        for (std::size_t t = 0; t < n; ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
      }
      norm[i] = dot(bstar[i], bstar[i]);
    }
  };
  gram_schmidt();

  std::size_t i = 1;
  while (i < k) {
    for (std::size_t jj = i; jj-- > 0;) {
      if (abs(mu[i][jj]) > half) {
        Int q = floor_of(mu[i][jj] + half);
        for (std::size_t t = 0; t < n; ++t) b[i][t] -= q * b[jj][t];
        for (std::size_t t = 0; t < jj; ++t) mu[i][t] -= q * mu[jj][t];
        mu[i][jj] -= q;
      }
    }
    if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  return b;
}

std::vector<IntVec> lll_reduce(const std::vector<IntVec>& basis) {
  std::vector<RatVec> rb;
  rb.reserve(basis.size());
  for (const auto& v : basis) rb.push_back(to_rat(v));
  auto red = lll_reduce_rational(std::move(rb));
  std::vector<IntVec> out;
  out.reserve(red.size());
  for (const auto& v : red) out.push_back(to_int(v));
  return out;
}

}  // namespace latcount
