#pragma once

#include "qk/zpoly.hpp"

namespace qk {

/// Element of Q(z): a reduced fraction of integer-coefficient polynomials
/// in z with monic denominator. This is the coefficient field everywhere, so
/// "generic z" statements hold identically rather than for sampled values.
class ScalarZ {
 public:
  ScalarZ() : num_(), den_(Rational(1)) {}
  ScalarZ(int v) : ScalarZ(Rational(v)) {}            // NOLINT
  ScalarZ(Rational v) : num_(std::move(v)), den_(Rational(1)) {}  // NOLINT
  ScalarZ(ZPoly num, ZPoly den);

  static ScalarZ z() { return ScalarZ(ZPoly::z(), ZPoly(Rational(1))); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Value as a rational; requires is_constant().
  Rational as_rational() const;

  ScalarZ operator-() const;
  ScalarZ operator+(const ScalarZ& o) const;
  ScalarZ operator-(const ScalarZ& o) const;
  ScalarZ operator*(const ScalarZ& o) const;
  ScalarZ operator/(const ScalarZ& o) const;
  ScalarZ& operator+=(const ScalarZ& o) { return *this = *this + o; }
  ScalarZ& operator*=(const ScalarZ& o) { return *this = *this * o; }

  ScalarZ inverse() const;
  ScalarZ pow(int k) const;  // k may be negative

  bool operator==(const ScalarZ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const ScalarZ& o) const { return !(*this == o); }
  /// Structural order for deterministic sorting.
  bool operator<(const ScalarZ& o) const;

  Complex eval(Complex z) const;
  /// Exact value at z = 0; requires the denominator not to vanish there.
  Rational at_zero() const;

  std::string str() const;

 private:
  void normalize();
  ZPoly num_, den_;
};

}  // namespace qk
