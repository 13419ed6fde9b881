#pragma once

#include <optional>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

/// Small dense exact linear algebra over the rationals. Row-major.
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatMat rat_matrix(const std::vector<IntVec>& rows);

int rank(RatMat m);

Rational determinant(RatMat m);

/// Solves m x = b for square or rectangular m. Returns nullopt when the
/// system is inconsistent; when underdetermined, free variables are set to 0.
std::optional<RatVec> solve(RatMat m, RatVec b);

/// Basis of the right kernel of m.
std::vector<RatVec> nullspace(RatMat m);

/// Inverse of a square nonsingular matrix.
std::optional<RatMat> inverse(const RatMat& m);

/// Scales a rational vector to a primitive integer vector with positive
/// first nonzero entry.
IntVec primitive_integer(const RatVec& v);

}  // namespace qk
