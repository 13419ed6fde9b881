#include "qk/scalar_z.hpp"

#include <cmath>

#include "qk/errors.hpp"

namespace qk {

ScalarZ::ScalarZ(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail("invalid-argument", "zero denominator in Q(z) element");
  normalize();
}

void ScalarZ::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(Rational(1));
    return;
  }
  ZPoly g = ZPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = ZPoly::divmod(num_, g).first;
    den_ = ZPoly::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = ZPoly(std::move(n));
    den_ = ZPoly(std::move(d));
  }
}

Rational ScalarZ::as_rational() const {
  if (!is_constant()) fail("invalid-argument", "Q(z) element is not a constant: " + str());
  return num_.coeff(0);
}

ScalarZ ScalarZ::operator-() const {
  ScalarZ out = *this;
  out.num_ = -out.num_;
  return out;
}

ScalarZ ScalarZ::operator+(const ScalarZ& o) const {
  return ScalarZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarZ ScalarZ::operator-(const ScalarZ& o) const { return *this + (-o); }

ScalarZ ScalarZ::operator*(const ScalarZ& o) const {
  return ScalarZ(num_ * o.num_, den_ * o.den_);
}

ScalarZ ScalarZ::operator/(const ScalarZ& o) const { return *this * o.inverse(); }

ScalarZ ScalarZ::inverse() const {
  if (is_zero()) fail("invalid-argument", "inverse of zero in Q(z)");
  return ScalarZ(den_, num_);
}

ScalarZ ScalarZ::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ScalarZ acc(Rational(1));
  ScalarZ base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool ScalarZ::operator<(const ScalarZ& o) const {
  auto cmp = [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
  };
  int c = cmp(num_, o.num_);
  if (c != 0) return c < 0;
  return cmp(den_, o.den_) < 0;
}

Complex ScalarZ::eval(Complex z) const {
  Complex d = den_.eval(z);
  if (std::abs(d) < 1e-300) fail("pole-proximity", "Q(z) denominator vanishes at z");
  return num_.eval(z) / d;
}

Rational ScalarZ::at_zero() const {
  Rational d = den_.coeff(0);
  if (d == 0) fail("pole-proximity", "Q(z) denominator vanishes at z = 0: " + str());
  return num_.coeff(0) / d;
}

std::string ScalarZ::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qk
