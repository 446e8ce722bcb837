#pragma once

#include <vector>

#include "latcount/genfun.hpp"
#include "latcount/parametric.hpp"
#include "latcount/stepfun.hpp"

namespace latcount {

/// Number of integer points of P_s as a piecewise step-polynomial of degree
/// at most d whose cells partition Q^n.
PiecewiseStepPoly count_parametric(const ParametricPolytope& p);

/// Same, restricted to the region of `domain` (cells partition the domain).
PiecewiseStepPoly count_parametric(const ParametricPolytope& p, const Cell& domain);

/// Generating function sum_{x in Q cap Z^dim} x^x of a line-free polyhedron.
/// Throws PreconditionError when Q contains a line.
RatGenFun lattice_point_genfun(const Polyhedron& q);

/// sum_s #(P_s cap Z^d) x^s as a rational function in the parameters.
RatGenFun genfun_parametric(const ParametricPolytope& p);

/// Coefficient function of the expansion of one term near e^l.
PiecewiseStepPoly vpf_term_to_step(const GFTerm& t, const IntVec& l);

/// Coefficient function of the expansion of f near e^l.
PiecewiseStepPoly gf_to_step(const RatGenFun& f, const IntVec& l);

/// Rational function whose expansion has coefficients c(s). Throws
/// PreconditionError when a piece with nonzero value contains a line.
RatGenFun step_to_gf(const PiecewiseStepPoly& c);

/// Smallest (max-norm, then lexicographic) integer l with <l, b> != 0 for
/// every b and each support meeting {<l, x> >= 0} in a bounded set.
/// bound = 0 selects 10 (n + 1). Throws PreconditionError if none exists.
IntVec pick_l(const std::vector<Polyhedron>& supports, const std::vector<IntVec>& denoms,
              std::size_t n, std::size_t bound = 0);
IntVec pick_l(const Polyhedron& support, const std::vector<IntVec>& denoms,
              std::size_t bound = 0);

/// Closures of the cells carrying nonzero values.
std::vector<Polyhedron> supports_of(const PiecewiseStepPoly& c);

}  // namespace latcount
