#pragma once

#include <json.hpp>

#include "latcount/genfun.hpp"
#include "latcount/parametric.hpp"
#include "latcount/stepfun.hpp"

namespace latcount::io {

using json = nlohmann::json;

/// Exact rationals are written as "p/q" (or "p") strings. Readers also
/// accept JSON integers. Malformed documents raise InputError.
json to_json(const Rat& x);
json to_json(const Int& x);
json to_json(const RatVec& v);
json to_json(const IntVec& v);
Rat rat_from_json(const json& j);
Int int_from_json(const json& j);
RatVec ratvec_from_json(const json& j);
IntVec intvec_from_json(const json& j);

/// {"dim", "ineqs": [{"a", "b", "strict"}], "eqs": [{"a", "b"}]}
json to_json(const Cell& c);
Cell cell_from_json(const json& j);

/// {"n", "d", "A", "B", "c"} plus optional "Aeq", "Beq", "ceq";
/// convention A s + B t <= c.
json to_json(const ParametricPolytope& p);
ParametricPolytope polytope_from_json(const json& j);

/// A polyhedron uses the polytope schema with n = 0 ("A" may be omitted).
json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const json& j);

/// {"terms": [{"coeff", "floors": [{"a", "b"}]}]}
json to_json(const StepPoly& g);
StepPoly steppoly_from_json(const json& j, std::size_t n);

/// {"n", "pieces": [{"cell", "value"}]}
json to_json(const PiecewiseStepPoly& c);
PiecewiseStepPoly piecewise_from_json(const json& j);

/// {"n", "terms": [{"coeff", "num", "denoms"}]}
json to_json(const RatGenFun& f);
RatGenFun genfun_from_json(const json& j);

/// {"n", "m", "terms": [...]} with StepPoly coefficients and numerators.
json to_json(const ParamGenFun& f);
ParamGenFun param_genfun_from_json(const json& j);

json to_json(const ChamberDecomposition& d);

/// Parses text, mapping syntax errors to InputError with the byte position.
json parse(const std::string& text);

std::string to_pretty(const RatGenFun& f);

}  // namespace latcount::io
