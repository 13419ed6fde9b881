#pragma once

#include <string>
#include <vector>

#include "qk/arrangement.hpp"

namespace qk {

/// Basic fraction c * y^m / y^e in the coordinates y_i = basis_forms_i(u);
/// sum(m) - sum(e) = -r.
struct BasicTerm {
  ScalarZ coefficient;
  std::vector<IntVec> basis_forms;  // r linearly independent integer forms
  std::vector<int> exponents;       // positive
  Exponents numerator_monomial;     // exponents in the basis-form coordinates
};

/// Rewrites the degree-(-r) homogeneous component of f as a sum of basic
/// terms with independent denominator forms. Remainder terms whose forms do
/// not span rank r are annihilated by the residue functional and omitted.
std::vector<BasicTerm> partial_fraction_reduce(const ArrangementFraction& f);

/// The homogeneous residue with chamber direction eta: on a basic term,
/// coefficient / |det| when eta lies in the cone of the basis forms and the
/// numerator monomial is the all-(exponent-1) pattern, else 0; extended
/// linearly. A non-generic eta is perturbed deterministically; the optional
/// trace receives a JSON report of every basic term and the perturbation.
ScalarZ jk_homogeneous(const ArrangementFraction& f, const RatVec& eta,
                       std::string* trace = nullptr);

/// The residue at an affine point: translate f, expand the denominator
/// factors that stay units, and take the homogeneous residue of the part
/// with poles at the point.
ScalarZ jk_at_point(const ArrangementFraction& f, const std::vector<ScalarZ>& point,
                    const RatVec& eta, std::string* trace = nullptr);

}  // namespace qk
