#pragma once

#include <vector>

#include "latcount/genfun.hpp"

namespace latcount {

/// Power series truncated to a fixed number of coefficients.
using TruncSeries = std::vector<Rat>;

/// First `order` coefficients of p / q via
/// c_j = (a_j - sum_{i=1..j} b_i c_{j-i}) / b_0. Throws PreconditionError
/// when b_0 = 0.
TruncSeries taylor_divide(const TruncSeries& p, const TruncSeries& q, std::size_t order);

/// Substitutes x_{m-k+i} = (1 + t)^{lambda_i} for the trailing k =
/// lambda.size() tracked variables and returns the constant term of the
/// Laurent expansion in t as a sum of terms in the remaining variables.
/// Throws PreconditionError if a denominator becomes 1 - (1+t)^0.
std::vector<ParamGFTerm> specialize_term(const ParamGFTerm& t, std::size_t n,
                                         const IntVec& lambda);
std::vector<GFTerm> specialize_term(const GFTerm& t, const IntVec& lambda);

/// One-shot substitution for the trailing lambda.size() variables.
ParamGenFun specialize_trailing(const ParamGenFun& f, const IntVec& lambda);

/// Substitutes 1 for the last tracked variable (lambda = 1).
ParamGenFun specialize_last(const ParamGenFun& f);

/// Substitutes 1 for every tracked variable, one at a time, and returns the
/// resulting step-polynomial in s.
StepPoly specialize_to_constant(const ParamGenFun& f);

/// Substitutes 1 for the last k variables, one at a time.
RatGenFun specialize_last_k(const RatGenFun& f, std::size_t k);

}  // namespace latcount
