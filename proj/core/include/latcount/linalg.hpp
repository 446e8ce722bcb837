#pragma once

#include <optional>
#include <vector>

#include "latcount/matrix.hpp"

namespace latcount {

struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> nullspace;  // basis of {x : A x = 0}
};

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_rational_system(const RatMat& a,
                                                    const RatVec& b);

std::size_t rank(const RatMat& a);
Rat determinant(const RatMat& a);
Int determinant(const IntMat& a);
std::optional<RatMat> inverse(const RatMat& a);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
RatMat rref(const RatMat& a, std::vector<std::size_t>* pivots = nullptr);

struct HermiteForm {
  IntMat h;
  IntMat u;  // unimodular, h = u * a
};

/// Row-style Hermite normal form in the lower-triangular convention:
/// zero rows come first, each nonzero row ends in a positive pivot that
/// lies strictly right of the previous row's pivot, and entries below a
/// pivot in its column are reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMat& a);

/// Same, upper-triangular convention (pivots move right going down, zero
/// rows last, entries above a pivot reduced into [0, pivot)).
HermiteForm upper_hermite_form(const IntMat& a);

struct ColumnHermite {
  IntMat h;  // a * v; the first `rank` columns are nonzero, the rest zero
  IntMat v;  // unimodular
  std::size_t rank = 0;
};

/// Column-style reduction: a * v = [H | 0].
ColumnHermite column_hermite_form(const IntMat& a);

/// LLL reduction with delta = 3/4 of a basis given as rows. Throws
/// PreconditionError when the vectors are linearly dependent.
std::vector<RatVec> lll_reduce_rational(std::vector<RatVec> basis);
std::vector<IntVec> lll_reduce(const std::vector<IntVec>& basis);

}  // namespace latcount
