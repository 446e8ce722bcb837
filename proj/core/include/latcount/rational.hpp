#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latcount {

// Arbitrary-precision scalars. gmpxx keeps mpq_class values canonical after
// every arithmetic operation; canonicalize() is only needed after building a
// value from a raw numerator/denominator pair.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int floor_of(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int ceil_of(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Fractional part in [0, 1).
inline Rat frac_of(const Rat& r) { return r - Rat(floor_of(r)); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& r) { return sgn(r); }

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& i);

/// Parses "p", "-p", "p/q". Throws InputError on malformed text or q = 0.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

/// Least common multiple of the denominators.
Int common_denominator(const RatVec& v);

RatVec to_rat(const IntVec& v);

/// Requires every entry integral; throws PreconditionError otherwise.
IntVec to_int(const RatVec& v);

/// Converts to int64, throwing PreconditionError when the value does not fit.
std::int64_t to_i64(const Int& i);

}  // namespace latcount
