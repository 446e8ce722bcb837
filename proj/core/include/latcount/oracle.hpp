#pragma once

#include <vector>

#include "latcount/genfun.hpp"
#include "latcount/parametric.hpp"

namespace latcount {

/// All integer points of a bounded polyhedron, in lexicographic order.
/// Throws PreconditionError when p is unbounded.
std::vector<IntVec> enumerate_lattice_points(const Polyhedron& p);

/// #(P_s cap Z^d) by enumeration.
Int count_bruteforce(const ParametricPolytope& p, const IntVec& s);

/// Coefficient of x^s in the expansion of f near e^l.
Rat series_coefficient(const RatGenFun& f, const IntVec& l, const IntVec& s);

/// #{t : exists u with (s, t, u) in P cap Z^(n+d+m)}, n = s.size().
Int count_projection_bruteforce(const Polyhedron& p, std::size_t d, const IntVec& s);

}  // namespace latcount
