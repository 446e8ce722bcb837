#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latcount/matrix.hpp"

namespace latcount {

/// <a, x> <= b, or <a, x> = b when stored as an equality.
struct Constraint {
  RatVec a;
  Rat b;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Constraint> ineqs;
  std::vector<Constraint> eqs;

  static Polyhedron universe(std::size_t dim) { return Polyhedron{dim, {}, {}}; }
  bool contains(const RatVec& x) const;
  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

/// A closed polyhedron in which the flagged inequalities must hold strictly.
/// The denoted point set is the relative interior of one face of a
/// partition, as produced by arrangements and chamber decompositions.
struct Cell {
  Polyhedron closed;
  std::vector<bool> strict;  // parallel to closed.ineqs

  static Cell universe(std::size_t dim) {
    return Cell{Polyhedron::universe(dim), {}};
  }
  std::size_t dim() const { return closed.dim; }
  void add_ineq(Constraint c, bool is_strict) {
    closed.ineqs.push_back(std::move(c));
    strict.push_back(is_strict);
  }
  void add_eq(Constraint c) { closed.eqs.push_back(std::move(c)); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

bool relint_contains(const Cell& cell, const RatVec& x);

bool is_empty(const Polyhedron& p);

/// A point of the cell's region (strict rows hold strictly), or nullopt when
/// the region is empty.
std::optional<RatVec> find_point(const Cell& cell);
std::optional<RatVec> find_point(const Polyhedron& p);

/// Coordinate-wise exact bounds; nullopt when p is unbounded (or empty).
std::optional<std::pair<RatVec, RatVec>> bounding_box(const Polyhedron& p);

bool is_bounded(const Polyhedron& p);

/// Rows of p.ineqs that hold with equality on all of p (p nonempty).
std::vector<std::size_t> implicit_equalities(const Polyhedron& p);

/// True when p contains a full line.
bool contains_line(const Polyhedron& p);

/// Scales a constraint so that its coefficients and constant are coprime
/// integers, keeping the direction of the inequality.
Constraint integer_normalized(const Constraint& c);

/// Returns an integer-coefficient constraint <a',x> <= b' with the same
/// integer solutions as <a,x> < b (strict) or <a,x> <= b.
Constraint tighten_for_integers(const Constraint& c, bool strict);

}  // namespace latcount
