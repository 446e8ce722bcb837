#pragma once

#include <vector>

#include "latcount/genfun.hpp"
#include "latcount/parametric.hpp"

namespace latcount {

/// Tangent cone {x : <c_i, x> <= <c_i, apex>} given by its primitive
/// integer normals c_i (any number, spanning Q^d).
struct VertexCone {
  std::vector<IntVec> normals;
  AffineMap apex;
};

/// d linearly independent primitive normals. Generators are the negative
/// dual basis directions; index = |det| of the normal matrix.
struct SimplicialCone {
  std::vector<IntVec> normals;

  std::vector<IntVec> generators() const;
  Int index() const;
};

struct SignedUnimodularCone {
  int sign = 1;
  std::vector<IntVec> normals;     // a basis of Z^d
  std::vector<IntVec> dual_gens;   // u_i with <u_i, c_j> = -1 if i = j, else 0
};

/// Cone at vertex v of P (rows tight at v on the chamber).
VertexCone vertex_cone(const ParametricPolytope& p, const AffineMap& apex,
                       const std::vector<std::size_t>& tight_rows);

/// Splits the dual cone spanned by the normals into simplicial cones whose
/// union is the dual cone and whose overlaps are lower-dimensional; the
/// corresponding primal cones then sum to the original cone modulo cones
/// containing lines, which have zero generating function.
std::vector<SimplicialCone> triangulate(const std::vector<IntVec>& normals);

/// Signed unimodular cones whose generating functions sum to that of K.
/// Decomposes the dual cone with short LLL vectors, discarding
/// lower-dimensional pieces.
std::vector<SignedUnimodularCone> barvinok_decompose(const SimplicialCone& k);

/// sign * x^p(s) / prod (1 - x^{u_i}),  p(s) = -sum floor(<c_i, apex(s)>) u_i.
ParamGFTerm unimodular_gf(const SignedUnimodularCone& k, const AffineMap& apex);

/// Sum of unimodular terms for one vertex cone.
std::vector<ParamGFTerm> vertex_cone_gf(const VertexCone& k);

/// Brion sum over the chamber's vertex cones; the chamber must have
/// full-dimensional fibers (no implicit equalities).
ParamGenFun brion_sum(const ChamberDecomposition& dec, std::size_t chamber);

}  // namespace latcount
