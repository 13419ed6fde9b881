#include "qk/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

Complex AffineForm::eval(const std::vector<Complex>& u, Complex z) const {
  Complex acc = constant.eval(z);
  for (std::size_t i = 0; i < linear.size(); ++i)
    acc += static_cast<double>(linear[i]) * u[i];
  return acc;
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (linear[i] == 0) continue;
    if (!first) os << (linear[i] > 0 ? " + " : " - ");
    else if (linear[i] < 0) os << "-";
    first = false;
    auto a = linear[i] < 0 ? -linear[i] : linear[i];
    if (a != 1) os << a << "*";
    os << "u" << (i + 1);
  }
  if (!constant.is_zero()) {
    if (!first) os << " + ";
    os << constant.str();
  }
  if (first && constant.is_zero()) return "0";
  return os.str();
}

ArrangementFraction::ArrangementFraction(int rank)
    : rank_(rank), num_(Polynomial::constant(rank, ScalarZ(1))) {}

ArrangementFraction::ArrangementFraction(Polynomial numerator,
                                         std::vector<DenominatorFactor> denominator)
    : rank_(numerator.rank()), num_(std::move(numerator)) {
  for (const auto& f : denominator) divide_by(f.form, f.power);
}

ArrangementFraction ArrangementFraction::from_polynomial(Polynomial p) {
  return ArrangementFraction(std::move(p), {});
}

void ArrangementFraction::divide_by(const AffineForm& form, int power) {
  if (power <= 0) fail("invalid-argument", "denominator power must be positive");
  if (qk::is_zero(form.linear) && form.constant.is_zero())
    fail("invalid-argument", "zero affine form in denominator");
  // A pure-constant factor is a unit of Q(z); fold it into the numerator.
  if (qk::is_zero(form.linear)) {
    num_ = num_ * form.constant.pow(-power);
    return;
  }
  // Normalize to primitive linear part with positive leading coordinate;
  // the scalar ratio moves into the numerator.
  IntVec prim = primitive(form.linear);
  std::size_t lead = 0;
  while (prim[lead] == 0) ++lead;
  Rational scale(form.linear[lead], prim[lead]);
  AffineForm normal{prim, form.constant / ScalarZ(scale)};
  num_ = num_ * ScalarZ(scale).pow(-power);
  for (auto& f : den_) {
    if (f.form == normal) {
      f.power += power;
      return;
    }
  }
  den_.push_back({normal, power});
  std::sort(den_.begin(), den_.end(), [](const DenominatorFactor& a, const DenominatorFactor& b) {
    return a.form < b.form;
  });
}

ArrangementFraction ArrangementFraction::operator*(const ArrangementFraction& o) const {
  if (rank_ != o.rank_) fail("invalid-argument", "rank mismatch in fraction product");
  ArrangementFraction out(num_ * o.num_, den_);
  for (const auto& f : o.den_) out.divide_by(f.form, f.power);
  return out;
}

ArrangementFraction ArrangementFraction::operator*(const Polynomial& p) const {
  ArrangementFraction out = *this;
  out.num_ = out.num_ * p;
  return out;
}

ArrangementFraction ArrangementFraction::translate(const std::vector<ScalarZ>& point) const {
  if (static_cast<int>(point.size()) != rank_)
    fail("invalid-argument", "translation point length does not match rank");
  ArrangementFraction out(num_.translate(point), {});
  for (const auto& f : den_) {
    ScalarZ shift(0);
    for (int i = 0; i < rank_; ++i) shift += ScalarZ(Rational(f.form.linear[i])) * point[i];
    out.divide_by({f.form.linear, f.form.constant + shift}, f.power);
  }
  return out;
}

int ArrangementFraction::denominator_degree() const {
  int d = 0;
  for (const auto& f : den_) d += f.power;
  return d;
}

Complex ArrangementFraction::eval(const std::vector<Complex>& u, Complex z,
                                  double pole_tol) const {
  Complex acc = num_.eval(u, z);
  for (const auto& f : den_) {
    Complex v = f.form.eval(u, z);
    if (std::abs(v) < pole_tol)
      fail("pole-proximity", "denominator form vanishes at evaluation point: " + f.form.str());
    for (int k = 0; k < f.power; ++k) acc /= v;
  }
  return acc;
}

std::string ArrangementFraction::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  for (const auto& f : den_) {
    os << " / (" << f.form.str() << ")";
    if (f.power > 1) os << "^" << f.power;
  }
  return os.str();
}

Polynomial unit_expand(const AffineForm& form, int exponent, int max_total_degree) {
  if (form.constant.is_zero())
    fail("not-a-unit", "cannot expand around a form vanishing at the origin: " + form.str());
  int rank = static_cast<int>(form.linear.size());
  // (c + L)^(-k) = c^(-k) sum_m binom(k+m-1, m) (-L/c)^m
  ScalarZ c_inv = form.constant.inverse();
  Polynomial lin = Polynomial::affine(form.linear, ScalarZ(0));
  Polynomial acc(rank);
  Polynomial lin_pow = Polynomial::constant(rank, ScalarZ(1));
  Rational binom = 1;
  for (int m = 0; m <= max_total_degree; ++m) {
    if (m > 0) {
      lin_pow = lin_pow * lin;
      binom = binom * (exponent + m - 1) / m;
    }
    ScalarZ coeff = ScalarZ(binom * ((m % 2 == 0) ? 1 : -1)) * c_inv.pow(exponent + m);
    acc = acc + lin_pow * coeff;
    if (lin_pow.is_zero()) break;  // constant form: series terminates
  }
  return acc;
}

}  // namespace qk
