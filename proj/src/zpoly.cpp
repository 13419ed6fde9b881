#include "qk/zpoly.hpp"

#include <sstream>

#include "qk/errors.hpp"

namespace qk {

ZPoly::ZPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

ZPoly::ZPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::z() { return ZPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ZPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational ZPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

ZPoly ZPoly::operator-() const {
  ZPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return ZPoly(std::move(c));
}

std::pair<ZPoly, ZPoly> ZPoly::divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail("invalid-argument", "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  std::vector<Rational> quot;
  int dq = static_cast<int>(rem.size()) - 1 - db;
  if (dq < 0) return {ZPoly{}, a};
  quot.assign(dq + 1, Rational(0));
  for (int k = dq; k >= 0; --k) {
    Rational f = rem[k + db] / b.coeffs_[db];
    quot[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs_[j];
  }
  return {ZPoly(std::move(quot)), ZPoly(std::move(rem))};
}

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
  while (!b.is_zero()) {
    ZPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ZPoly ZPoly::monic() const {
  if (is_zero()) return {};
  Rational lead = coeffs_.back();
  ZPoly out = *this;
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Complex ZPoly::eval(Complex z) const {
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Rational ZPoly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = boost::multiprecision::abs(c);
    if (i == 0 || a != 1) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qk
