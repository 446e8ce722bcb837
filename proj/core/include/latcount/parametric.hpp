#pragma once

#include <vector>

#include "latcount/polyhedron.hpp"

namespace latcount {

/// <a, s> + <b, t> <= c  (or = c for an equality row).
struct ParamConstraint {
  RatVec a;  // parameter part, length n
  RatVec b;  // variable part, length d
  Rat c;
  friend bool operator==(const ParamConstraint&, const ParamConstraint&) = default;
};

/// P_s = { t in Q^d : A s + B t <= c } together with optional equality rows.
struct ParametricPolytope {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<ParamConstraint> ineqs;
  std::vector<ParamConstraint> eqs;

  static ParametricPolytope from_matrices(const RatMat& a, const RatMat& b,
                                          const RatVec& c);
  void validate() const;
  /// P_s as a polyhedron in t-space.
  Polyhedron fiber(const RatVec& s) const;
  /// P as a polyhedron in (s, t)-space.
  Polyhedron lifted() const;
  /// The t-recession cone {t : B t <= 0, B_eq t = 0} is {0}.
  bool fibers_bounded() const;
  /// Equalities rewritten as pairs of opposite inequalities, appended in
  /// order after the existing inequalities.
  ParametricPolytope equalities_as_pairs() const;
  friend bool operator==(const ParametricPolytope&, const ParametricPolytope&) = default;
};

struct AffineMap {
  RatMat linear;  // rows = output dim, cols = n
  RatVec offset;
  RatVec operator()(const RatVec& s) const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct ParamVertex {
  AffineMap map;
  std::vector<std::size_t> tight;  // d rows with invertible B restriction
  Polyhedron activity;             // s-values where map(s) lies in P_s
};

/// All parametric vertices, one per distinct affine map. Equality rows are
/// first rewritten with equalities_as_pairs(), and row indices refer to
/// that system. Throws PreconditionError when fibers can be unbounded
/// (unless check_bounded is false).
std::vector<ParamVertex> parametric_vertices(const ParametricPolytope& p,
                                             bool check_bounded = true);

struct ChamberVertex {
  std::size_t vertex;              // index into the vertex list
  std::vector<std::size_t> tight;  // rows (with nonzero B part) tight on the cell
};

struct Chamber {
  Cell cell;
  RatVec sample;  // a point of the cell's region
  std::vector<ChamberVertex> vertices;
};

struct ChamberDecomposition {
  ParametricPolytope polytope;  // equalities rewritten as pairs
  std::vector<ParamVertex> vertices;
  std::vector<Chamber> chambers;
};

/// Cells of the arrangement of all activity hyperplanes inside `domain`,
/// each with its active vertices (coincident maps merged).
ChamberDecomposition chamber_decomposition(const ParametricPolytope& p,
                                           const Cell& domain);
ChamberDecomposition chamber_decomposition(const ParametricPolytope& p);

struct EqualityElimination {
  ParametricPolytope reduced;  // variables z, no equality rows
  /// t = back_linear * s + back_offset + back_free * z
  RatMat back_linear;
  RatVec back_offset;
  RatMat back_free;
  /// Unimodular change of coordinates on t; the leading coordinates of
  /// witness * t are fixed by s, the trailing ones are z.
  IntMat witness;
  /// Each affine form <a, s> + c must be integral for lattice points to exist.
  std::vector<Constraint> integrality;
  /// No integer solutions for any s.
  bool empty = false;
};

/// Removes the equality rows by an integral change of coordinates.
/// Equalities that only involve s are kept as pairs of inequalities with a
/// zero variable part. Throws PreconditionError when the equalities are
/// rationally inconsistent.
EqualityElimination eliminate_equalities(const ParametricPolytope& p);

}  // namespace latcount
