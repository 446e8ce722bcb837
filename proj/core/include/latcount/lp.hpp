#pragma once

#include "latcount/polyhedron.hpp"

namespace latcount {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  RatVec x;  // optimal point when status == optimal
};

/// Maximizes <objective, x> over p with free variables. Two-phase
/// dictionary simplex, Bland's rule, exact arithmetic.
LpResult lp_maximize(const Polyhedron& p, const RatVec& objective);

inline LpResult lp_minimize(const Polyhedron& p, const RatVec& objective) {
  LpResult r = lp_maximize(p, -objective);
  r.value = -r.value;
  return r;
}

}  // namespace latcount
