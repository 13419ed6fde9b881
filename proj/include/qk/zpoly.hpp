#pragma once

#include <vector>

#include "qk/rational.hpp"

namespace qk {

/// Univariate polynomial in the equivariant variable z with rational
/// coefficients, stored dense by ascending degree with no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(Rational constant);  // NOLINT: implicit by design
  explicit ZPoly(std::vector<Rational> coeffs);

  static ZPoly z();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with deg(0) = -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;

  bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b);
  static ZPoly gcd(ZPoly a, ZPoly b);  // monic, gcd(0,0) = 0

  ZPoly monic() const;
  Complex eval(Complex z) const;
  Rational eval(const Rational& z) const;

  std::string str() const;  // human-readable, e.g. "1 - 2*z + z^2"

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace qk
