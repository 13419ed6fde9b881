#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the partial-fraction kernel: the residue oracle decomposes the
// degree-(-r) component into elementary two-form monomials by exact linear
// algebra and applies the defining property of the residue functional
// directly; the Quot-scheme oracle is a plain roots-of-unity character sum.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qk/arrangement.hpp"
#include "qk/linalg.hpp"

namespace qk::test {

// Residue of f with chamber direction eta, rank 1 or 2, z-free numerator.
// Decomposes the degree-(-r) component over candidates prod_{i in sigma}
// rho_i^{a_i} (sigma independent, sum a = -r) by clearing denominators; any
// solution gives the residue because the functional is well defined.
inline ScalarZ jk_oracle(const ArrangementFraction& f, const RatVec& eta) {
  const int r = f.rank();
  if (r < 1 || r > 2) throw std::runtime_error("oracle supports rank 1 and 2 only");
  std::vector<IntVec> forms;
  int dtotal = 0;
  for (const auto& d : f.denominator()) {
    if (!d.form.constant.is_zero()) throw std::runtime_error("oracle needs homogeneous forms");
    forms.push_back(d.form.linear);
    dtotal += d.power;
  }
  Polynomial comp = f.numerator().homogeneous_component(dtotal - r);
  if (comp.is_zero()) return ScalarZ(0);
  const int nf = static_cast<int>(forms.size());
  const int E = dtotal + 2;  // clearing exponent per form

  // Candidate supports: independent subsets of size r.
  struct Candidate {
    std::vector<int> support;
    std::vector<int> exps;
  };
  std::vector<Candidate> candidates;
  auto add_candidates = [&](const std::vector<int>& sup) {
    if (rank(rat_matrix({forms[sup[0]]})) < 1) return;
    if (r == 2) {
      RatMat m = rat_matrix({forms[sup[0]], forms[sup[1]]});
      if (rank(m) < 2) return;
      for (int a = -E; a <= nf * E; ++a) {
        int b = -r - a;
        if (b < -E || b > nf * E) continue;
        candidates.push_back({sup, {a, b}});
      }
    } else {
      candidates.push_back({sup, {-1}});
    }
  };
  if (r == 1) {
    for (int i = 0; i < nf; ++i) add_candidates({i});
  } else {
    for (int i = 0; i < nf; ++i)
      for (int j = i + 1; j < nf; ++j) add_candidates({i, j});
  }
  if (candidates.empty()) return ScalarZ(0);  // forms cannot span

  // Clearing denominator prod rho_i^E; both sides become homogeneous
  // polynomials of degree nf*E - r.
  auto form_poly = [&](int i) { return Polynomial::affine(forms[i], ScalarZ(0)); };
  std::vector<Polynomial> cleared;
  for (const auto& c : candidates) {
    Polynomial p = Polynomial::constant(r, ScalarZ(1));
    for (int i = 0; i < nf; ++i) {
      int e = E;
      for (std::size_t k = 0; k < c.support.size(); ++k)
        if (c.support[k] == i) e += c.exps[k];
      if (e < 0) throw std::logic_error("negative cleared exponent");
      p = p * form_poly(i).pow(e);
    }
    cleared.push_back(p);
  }
  Polynomial lhs = comp;
  {
    std::vector<int> extra(nf, E);
    for (const auto& d : f.denominator()) {
      for (int i = 0; i < nf; ++i)
        if (forms[i] == d.form.linear) extra[i] -= d.power;
    }
    for (int i = 0; i < nf; ++i) lhs = lhs * form_poly(i).pow(extra[i]);
  }

  // Monomial-indexed rational linear system.
  std::vector<Exponents> monomials;
  for (const auto& [e, c] : lhs.terms()) monomials.push_back(e);
  for (const auto& p : cleared)
    for (const auto& [e, c] : p.terms())
      if (std::find(monomials.begin(), monomials.end(), e) == monomials.end())
        monomials.push_back(e);
  RatMat a(monomials.size(), RatVec(candidates.size(), Rational(0)));
  RatVec b(monomials.size(), Rational(0));
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    ScalarZ lv = lhs.coefficient(monomials[m]);
    if (!lv.is_constant()) throw std::runtime_error("oracle needs a z-free numerator");
    b[m] = lv.as_rational();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      a[m][k] = cleared[k].coefficient(monomials[m]).is_zero()
                    ? Rational(0)
                    : cleared[k].coefficient(monomials[m]).as_rational();
  }
  auto sol = solve(a, b);
  if (!sol) throw std::runtime_error("oracle decomposition failed");

  Rational total(0);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if ((*sol)[k] == 0) continue;
    bool pole_pattern = true;
    for (int e : candidates[k].exps)
      if (e != -1) pole_pattern = false;
    if (!pole_pattern) continue;
    std::vector<IntVec> sigma;
    for (int i : candidates[k].support) sigma.push_back(forms[i]);
    // Cone membership: eta = sum t_i rho_i with t > 0.
    RatMat mt(r, RatVec(r, Rational(0)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mt[i][j] = Rational(sigma[j][i]);
    auto t = solve(mt, eta);
    bool inside = true;
    for (const auto& x : *t)
      if (x <= 0) inside = false;
    if (!inside) continue;
    Rational det = determinant(rat_matrix(sigma));
    if (det < 0) det = -det;
    total += (*sol)[k] / det;
  }
  return ScalarZ(total);
}

// Intersection numbers on the Quot scheme compactifying maps P^1 -> Gr(r,n)
// of degree d, as a roots-of-unity sum over ordered r-tuples.
inline Complex quot_oracle(int r, int n, int d, const Polynomial& insertion) {
  const double pi = std::acos(-1.0);
  std::vector<Complex> roots;
  for (int k = 0; k < n; ++k)
    roots.push_back(std::polar(1.0, 2.0 * pi * double(k) / double(n)));
  std::vector<int> idx(r, 0);
  Complex sum(0.0, 0.0);
  while (true) {
    std::vector<Complex> u(r);
    for (int i = 0; i < r; ++i) u[i] = roots[idx[i]];
    Complex term = insertion.eval_at_zero_z(u);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) term *= (u[i] - u[j]) * (u[i] - u[j]);
    for (int i = 0; i < r; ++i) term *= u[i];
    sum += term;
    int i = 0;
    while (i < r && idx[i] + 1 == n) idx[i++] = 0;
    if (i == r) break;
    ++idx[i];
  }
  int eps = d * (r - 1) + r * (r - 1) / 2;
  double fact = 1.0;
  for (int k = 2; k <= r; ++k) fact *= double(k);
  double sign = eps % 2 == 0 ? 1.0 : -1.0;
  return sum * sign / (fact * std::pow(double(n), r));
}

}  // namespace qk::test
