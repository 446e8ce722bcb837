#pragma once

#include <vector>

#include "latcount/stepfun.hpp"

namespace latcount {

/// coeff * x^num / prod_j (1 - x^denoms[j])
struct GFTerm {
  Rat coeff;
  IntVec num;
  std::vector<IntVec> denoms;  // kept sorted
  friend bool operator==(const GFTerm&, const GFTerm&) = default;
};

struct RatGenFun {
  std::size_t n = 0;
  std::vector<GFTerm> terms;

  std::size_t k_bound() const;
  /// Sorts denominators within terms, merges terms with identical numerator
  /// and denominators, drops zero terms and sorts the term list.
  void normalize();
  friend bool operator==(const RatGenFun&, const RatGenFun&) = default;
};

/// Throws InputError for zero denominators or mismatched dimensions.
void validate(const RatGenFun& f);

/// 1/(1 - x^b) = -x^-b / (1 - x^-b) applied to denominator j.
GFTerm flip_denominator(const GFTerm& t, std::size_t j);

/// Flips denominators until <l, b> < 0 for all of them. Throws
/// PreconditionError naming the term and factor when <l, b> = 0.
RatGenFun orient_to_l(const RatGenFun& f, const IntVec& l);
GFTerm orient_to_l(const GFTerm& t, const IntVec& l, std::size_t term_index = 0);

/// Exact value as a rational function at x (x must avoid poles and zeros
/// of coordinates used with negative exponents).
Rat evaluate(const RatGenFun& f, const RatVec& x);

/// Term whose coefficient and numerator exponents depend on s.
struct ParamGFTerm {
  StepPoly coeff;
  std::vector<StepPoly> num;
  std::vector<IntVec> denoms;  // kept sorted
};

struct ParamGenFun {
  std::size_t n = 0;  // parameters
  std::size_t m = 0;  // tracked variables
  std::vector<ParamGFTerm> terms;

  /// Merges terms with identical numerators and denominators.
  void normalize();
};

/// Throws PreconditionError when an exponent is not an integer at s.
RatGenFun instantiate(const ParamGenFun& f, const IntVec& s);

/// Views a constant generating function as a parametric one over n = 0.
ParamGenFun to_param(const RatGenFun& f);
/// Inverse of to_param; requires n = 0.
RatGenFun from_param(const ParamGenFun& f);

}  // namespace latcount
