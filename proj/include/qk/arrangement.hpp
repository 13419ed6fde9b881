#pragma once

#include <vector>

#include "qk/polynomial.hpp"

namespace qk {

/// Affine-linear form linear·u + constant with integer linear part and
/// constant in Q(z). At least one of the two parts is nonzero.
struct AffineForm {
  IntVec linear;
  ScalarZ constant;

  bool is_homogeneous() const { return constant.is_zero(); }
  Complex eval(const std::vector<Complex>& u, Complex z) const;
  Polynomial as_polynomial() const { return Polynomial::affine(linear, constant); }
  std::string str() const;

  bool operator==(const AffineForm& o) const {
    return linear == o.linear && constant == o.constant;
  }
  bool operator<(const AffineForm& o) const {
    if (linear != o.linear) return linear < o.linear;
    return constant < o.constant;
  }
};

struct DenominatorFactor {
  AffineForm form;
  int power = 1;
};

/// Numerator polynomial over a factored denominator: a multiset of powers of
/// pairwise non-proportional affine-linear forms. Denominators are never
/// expanded; forms are kept primitive (integer linear part, positive leading
/// coordinate) with scalar ratios absorbed into the numerator.
class ArrangementFraction {
 public:
  explicit ArrangementFraction(int rank);
  ArrangementFraction(Polynomial numerator, std::vector<DenominatorFactor> denominator);

  static ArrangementFraction from_polynomial(Polynomial p);

  int rank() const { return rank_; }
  const Polynomial& numerator() const { return num_; }
  const std::vector<DenominatorFactor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Appends a denominator factor form^power (merging proportional forms).
  void divide_by(const AffineForm& form, int power);

  ArrangementFraction operator*(const ArrangementFraction& o) const;
  ArrangementFraction operator*(const Polynomial& p) const;

  /// Substitutes u -> u + point everywhere.
  ArrangementFraction translate(const std::vector<ScalarZ>& point) const;

  /// Total denominator degree (sum of powers).
  int denominator_degree() const;

  Complex eval(const std::vector<Complex>& u, Complex z, double pole_tol = 1e-12) const;

  std::string str() const;

 private:
  int rank_;
  Polynomial num_;
  std::vector<DenominatorFactor> den_;
};

/// Truncated Taylor expansion of (constant + linear·u)^(-exponent) around
/// u = 0, keeping terms of total degree <= max_total_degree. The constant
/// must be nonzero ("not-a-unit" otherwise).
Polynomial unit_expand(const AffineForm& form, int exponent, int max_total_degree);

}  // namespace qk
