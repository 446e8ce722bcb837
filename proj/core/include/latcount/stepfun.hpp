#pragma once

#include <map>
#include <string>
#include <vector>

#include "latcount/polyhedron.hpp"

namespace latcount {

/// floor(<a, s> + b). The coordinate s_i itself is stored as a = e_i, b = 0.
struct FloorForm {
  RatVec a;
  Rat b;

  Rat value(const IntVec& s) const;
  bool is_coordinate() const;
  friend bool operator==(const FloorForm&, const FloorForm&) = default;
  friend bool operator<(const FloorForm& x, const FloorForm& y);
};

/// Sum of rational multiples of products of floors of affine forms.
///
/// Floors are normalized on construction: integer parts of the
/// coefficients and of the constant are pulled out as coordinates and
/// constants (valid at integer s), so every non-coordinate floor has
/// coefficients and constant in [0, 1). Terms with equal factor multisets
/// are merged and zero terms dropped.
class StepPoly {
 public:
  using Monomial = std::vector<FloorForm>;  // sorted

  StepPoly() = default;
  explicit StepPoly(std::size_t n) : n_(n) {}

  static StepPoly constant(std::size_t n, const Rat& c);
  static StepPoly coordinate(std::size_t n, std::size_t i);
  /// <a, s> + b with s_i as coordinates (no floor taken).
  static StepPoly affine(const RatVec& a, const Rat& b);
  /// floor(<a, s> + b), normalized.
  static StepPoly floor_of(const RatVec& a, const Rat& b);

  std::size_t n() const { return n_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  void add_term(Monomial m, const Rat& coeff);

  std::size_t degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat eval(const IntVec& s) const;
  /// Degree at most one with integer coefficients on every factor, so that
  /// the value at integer s is an integer.
  bool is_integer_valued_linear() const;

  StepPoly& operator+=(const StepPoly& o);
  StepPoly& operator-=(const StepPoly& o);
  StepPoly& operator*=(const Rat& k);
  friend StepPoly operator+(StepPoly a, const StepPoly& b) { return a += b; }
  friend StepPoly operator-(StepPoly a, const StepPoly& b) { return a -= b; }
  friend StepPoly operator-(StepPoly a) { return a *= Rat(-1); }
  friend StepPoly operator*(StepPoly a, const Rat& k) { return a *= k; }
  friend StepPoly operator*(const Rat& k, StepPoly a) { return a *= k; }
  friend StepPoly operator*(const StepPoly& a, const StepPoly& b);
  friend bool operator==(const StepPoly&, const StepPoly&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Monomial, Rat> terms_;
};

inline StepPoly add_steppoly(const StepPoly& g, const StepPoly& h) { return g + h; }
inline StepPoly mul_steppoly(const StepPoly& g, const StepPoly& h) { return g * h; }
inline Rat eval_steppoly(const StepPoly& g, const IntVec& s) { return g.eval(s); }

/// s -> g(s - p) for an integer shift p.
StepPoly shifted(const StepPoly& g, const IntVec& p);

/// Human-readable form such as "1/2*s1^2 - floor(1/2*s1)*s1 + 1".
std::string to_pretty(const StepPoly& g);

struct Piece {
  Cell cell;
  StepPoly value;
};

struct PiecewiseStepPoly {
  std::size_t n = 0;
  std::vector<Piece> pieces;

  std::size_t degree() const;
  /// Index of the piece whose region contains s, or npos.
  std::size_t locate(const RatVec& s) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Throws PreconditionError when no piece contains s.
Rat eval_piecewise(const PiecewiseStepPoly& c, const IntVec& s);

/// Pointwise sum. The cells are those of the arrangement of every
/// hyperplane bounding a nonzero input piece; on each cell the value is the
/// sum of the containing input pieces' values.
PiecewiseStepPoly sum_piecewise(const std::vector<PiecewiseStepPoly>& cs);

/// Multiplies every piece's value by g.
PiecewiseStepPoly multiply(const PiecewiseStepPoly& c, const StepPoly& g);

/// s -> c(s - p): cells are translated by p.
PiecewiseStepPoly shifted(const PiecewiseStepPoly& c, const IntVec& p);

std::string to_pretty(const PiecewiseStepPoly& c);

}  // namespace latcount
