#pragma once

#include <map>
#include <vector>

#include "qk/linalg.hpp"
#include "qk/scalar_z.hpp"

namespace qk {

/// Exponent vector in the u-variables; length = rank.
using Exponents = std::vector<int>;

/// Polynomial in u_1..u_r over Q(z). Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int rank) : rank_(rank) {}

  static Polynomial constant(int rank, ScalarZ c);
  static Polynomial variable(int rank, int index);
  /// The degree-one polynomial linear·u + c.
  static Polynomial affine(const IntVec& linear, const ScalarZ& c);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, ScalarZ>& terms() const { return terms_; }

  void add_term(const Exponents& e, const ScalarZ& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const ScalarZ& c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  int total_degree() const;  // -1 for zero
  Polynomial homogeneous_component(int d) const;
  bool is_homogeneous() const;

  /// Substitutes u_i -> u_i + shift_i.
  Polynomial translate(const std::vector<ScalarZ>& shift) const;
  /// Substitutes u_i -> sum_j a[i][j] * u_j.
  Polynomial substitute_linear(const RatMat& a) const;
  /// Coefficient of the given monomial (zero if absent).
  ScalarZ coefficient(const Exponents& e) const;

  Complex eval(const std::vector<Complex>& u, Complex z) const;
  /// Evaluates all z-coefficients at z = 0 first, then at u.
  Complex eval_at_zero_z(const std::vector<Complex>& u) const;

  std::string str() const;

 private:
  int rank_;
  std::map<Exponents, ScalarZ> terms_;
};

/// Parses the CLI insertion syntax: rationals, u1..ur, + - * ^ and
/// parentheses, e.g. "(u1+u2)^4" or "3/2*u1^2*u2 - u2^3".
Polynomial parse_polynomial(const std::string& text, int rank);

}  // namespace qk
