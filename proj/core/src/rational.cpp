#include "latcount/rational.hpp"

#include <cctype>
#include <limits>

#include "latcount/error.hpp"

namespace latcount {

std::string to_string(const Int& i) { return i.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int integer_from(std::string_view s) {
  if (!valid_integer_text(s))
    throw InputError("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Int parse_int(std::string_view text) { return integer_from(text); }

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(integer_from(text));
  Int num = integer_from(text.substr(0, slash));
  Int den = integer_from(text.substr(slash + 1));
  if (den == 0)
    throw InputError("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x))
      throw PreconditionError("expected an integer, got " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

std::int64_t to_i64(const Int& i) {
  if (!i.fits_slong_p())
    throw PreconditionError("integer " + i.get_str() + " exceeds 64 bits");
  return i.get_si();
}

}  // namespace latcount
