#pragma once

#include <vector>

#include "latcount/polyhedron.hpp"

namespace latcount {

/// Hyperplane <a, x> = b.
using Hyperplane = Constraint;

struct ArrangementCell {
  Cell cell;
  RatVec point;  // lies in the cell's region
};

/// Sum over i <= d of C(m, i).
Int phi_bound(std::size_t m, std::size_t d);

/// Cells (of every dimension) of the arrangement cut out by `hyperplanes`
/// inside `domain`. Their regions partition the region of `domain`.
/// Hyperplanes are inserted one at a time; each insertion splits the cells
/// it meets into the open sides and the part on the hyperplane.
std::vector<Cell> hyperplane_arrangement(const std::vector<Hyperplane>& hyperplanes,
                                         const Cell& domain);

/// Same cells, each with a sample point of its region.
std::vector<ArrangementCell> arrangement_cells(
    const std::vector<Hyperplane>& hyperplanes, const Cell& domain);

std::vector<Cell> hyperplane_arrangement(const std::vector<Hyperplane>& hyperplanes,
                                         std::size_t dim);

/// Canonical scaling (coprime integers, first nonzero coefficient positive);
/// nullopt for hyperplanes with a zero normal.
std::optional<Hyperplane> canonical_hyperplane(const Hyperplane& h);

/// Dimension of the affine hull of a nonempty cell.
std::size_t cell_dimension(const Cell& cell);

}  // namespace latcount
