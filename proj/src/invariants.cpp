#include "qk/invariants.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qk/errors.hpp"
#include "qk/jk_residue.hpp"

namespace qk {

namespace {

ScalarZ kz(std::int64_t k) { return ScalarZ(Rational(k)) * ScalarZ::z(); }

AffineForm weight_form(const CharacterVector& w, std::int64_t k) {
  return AffineForm{w.coords, kz(k)};
}

// D with the cases flipped, so 1/D never requires polynomial inversion.
ArrangementFraction d_factor_with_sign(const DegreeVector& delta_t, const CharacterVector& w,
                                       bool inverted) {
  const int r = static_cast<int>(w.coords.size());
  const std::int64_t m = pairing(delta_t, w);
  ArrangementFraction f(r);
  auto numerator_range = [&](std::int64_t lo, std::int64_t hi) {
    Polynomial num = Polynomial::constant(r, ScalarZ(1));
    for (std::int64_t k = lo; k <= hi; ++k) num = num * weight_form(w, k).as_polynomial();
    return ArrangementFraction::from_polynomial(num);
  };
  auto denominator_range = [&](std::int64_t lo, std::int64_t hi) {
    ArrangementFraction g(r);
    for (std::int64_t k = lo; k <= hi; ++k) g.divide_by(weight_form(w, k), 1);
    return g;
  };
  if (m == -1) return f;
  if (m > -1) return inverted ? denominator_range(0, m) : numerator_range(0, m);
  return inverted ? numerator_range(m + 1, -1) : denominator_range(m + 1, -1);
}

}  // namespace

ArrangementFraction d_factor(const DegreeVector& delta_t, const CharacterVector& w) {
  return d_factor_with_sign(delta_t, w, false);
}

ArrangementFraction root_factor(const DegreeVector& delta_t, const GitPresentation& p) {
  Polynomial out = Polynomial::constant(p.rank, ScalarZ(1));
  for (const auto& alpha : p.positive_roots) {
    const std::int64_t m = pairing(delta_t, alpha);
    ScalarZ sign((m + 1) % 2 == 0 ? 1 : -1);
    Polynomial a = Polynomial::affine(alpha.coords, ScalarZ(0));
    Polynomial shifted = Polynomial::affine(alpha.coords, kz(m));
    out = out * a * shifted * sign;
  }
  return ArrangementFraction::from_polynomial(out);
}

ArrangementFraction z_integrand(const DegreeVector& delta_t, const GitPresentation& p) {
  ArrangementFraction f = root_factor(delta_t, p);
  for (const auto& w : p.weights) f = f * d_factor_with_sign(delta_t, w, true);
  return f;
}

ArrangementFraction nonequivariant_integrand(const DegreeVector& delta_t,
                                             const GitPresentation& p) {
  ArrangementFraction f(p.rank);
  Polynomial num = Polynomial::constant(p.rank, ScalarZ(1));
  for (const auto& w : p.weights) {
    const std::int64_t e = -1 - pairing(delta_t, w);
    if (e >= 0)
      num = num * Polynomial::affine(w.coords, ScalarZ(0)).pow(static_cast<int>(e));
    else
      f.divide_by(AffineForm{w.coords, ScalarZ(0)}, static_cast<int>(-e));
  }
  for (const auto& alpha : p.positive_roots) {
    const std::int64_t m = pairing(delta_t, alpha);
    ScalarZ sign((1 + m) % 2 == 0 ? 1 : -1);
    num = num * Polynomial::affine(alpha.coords, ScalarZ(0)).pow(2) * sign;
  }
  return f * num;
}

namespace {

RatVec stability_direction(const GitPresentation& p) {
  RatVec eta;
  for (auto x : p.stability.coords) eta.push_back(Rational(x));
  return eta;
}

Polynomial oriented_insertion(const InvariantRequest& req, bool dualize) {
  if (!dualize) return req.insertion;
  RatMat neg(req.presentation.rank, RatVec(req.presentation.rank, Rational(0)));
  for (int i = 0; i < req.presentation.rank; ++i) neg[i][i] = Rational(-1);
  return req.insertion.substitute_linear(neg);
}

void check_symmetry(const InvariantRequest& req) {
  if (req.skip_symmetry_check) return;
  if (!validate_insertion(req.insertion, req.presentation))
    fail("invalid-argument", "insertion is not Weyl-invariant");
}

ScalarZ equivariant_sum(const GitPresentation& p, const GDegree& delta,
                        const Polynomial& insertion,
                        std::vector<TermContribution>* breakdown, std::string* trace) {
  RatVec eta = stability_direction(p);
  ScalarZ total(0);
  nlohmann::json jk_reports = nlohmann::json::array();
  for (const auto& lift : enumerate_lifts(delta, p)) {
    ArrangementFraction integrand = z_integrand(lift, p) * insertion;
    for (const auto& [d1, d2] : effective_splittings(lift, p)) {
      std::vector<ScalarZ> point;
      for (auto x : d2.coords) point.push_back(kz(-x));
      std::string term_trace;
      ScalarZ v = jk_at_point(integrand, point, eta, trace ? &term_trace : nullptr);
      total += v;
      if (breakdown)
        breakdown->push_back({lift, d1, d2, true, v});
      if (trace) {
        nlohmann::json jt;
        jt["lift"] = lift.coords;
        jt["split"] = {d1.coords, d2.coords};
        jt["jk"] = nlohmann::json::parse(term_trace);
        jk_reports.push_back(jt);
      }
    }
  }
  if (trace) *trace = jk_reports.dump(2);
  return total * ScalarZ(Rational(1) / Rational(p.weyl_order));
}

ScalarZ nonequivariant_sum(const GitPresentation& p, const GDegree& delta,
                           const Polynomial& insertion,
                           std::vector<TermContribution>* breakdown, std::string* trace) {
  RatVec eta = stability_direction(p);
  ScalarZ total(0);
  nlohmann::json jk_reports = nlohmann::json::array();
  for (const auto& lift : enumerate_lifts(delta, p)) {
    ArrangementFraction integrand = nonequivariant_integrand(lift, p) * insertion;
    std::string term_trace;
    ScalarZ v = jk_homogeneous(integrand, eta, trace ? &term_trace : nullptr);
    total += v;
    if (breakdown) breakdown->push_back({lift, {}, {}, false, v});
    if (trace) {
      nlohmann::json jt;
      jt["lift"] = lift.coords;
      jt["jk"] = nlohmann::json::parse(term_trace);
      jk_reports.push_back(jt);
    }
  }
  if (trace) *trace = jk_reports.dump(2);
  return total * ScalarZ(Rational(1) / Rational(p.weyl_order));
}

std::string breakdown_str(const std::vector<TermContribution>& terms) {
  std::string s;
  for (const auto& t : terms) {
    s += " [lift";
    for (auto x : t.lift.coords) s += " " + std::to_string(x);
    s += " -> " + t.value.str() + "]";
  }
  return s;
}

bool z_free(const Polynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_constant()) return false;
  return true;
}

}  // namespace

InvariantResult equivariant_invariant(const InvariantRequest& req, std::string* trace) {
  req.presentation.validate();
  check_symmetry(req);
  InvariantResult res;
  res.value = equivariant_sum(req.presentation, req.degree,
                              oriented_insertion(req, req.dualize), &res.breakdown, trace);
  res.dualized_value = equivariant_sum(req.presentation, req.degree,
                                       oriented_insertion(req, !req.dualize), nullptr, nullptr);
  if (!res.value.is_polynomial())
    fail("inconsistent-result",
         "equivariant invariant is not a polynomial in z: " + res.value.str() +
             "; breakdown:" + breakdown_str(res.breakdown));
  return res;
}

InvariantResult nonequivariant_invariant(const InvariantRequest& req, std::string* trace) {
  req.presentation.validate();
  check_symmetry(req);
  InvariantResult res;
  res.value = nonequivariant_sum(req.presentation, req.degree,
                                 oriented_insertion(req, req.dualize), &res.breakdown, trace);
  res.dualized_value = nonequivariant_sum(req.presentation, req.degree,
                                          oriented_insertion(req, !req.dualize), nullptr, nullptr);
  if (z_free(req.insertion) && !res.value.is_constant())
    fail("inconsistent-result",
         "nonequivariant invariant is not z-free: " + res.value.str() +
             "; breakdown:" + breakdown_str(res.breakdown));
  return res;
}

std::int64_t virtual_dimension(const GDegree& delta, const GitPresentation& p) {
  Rational k = anticanonical_pairing(delta, p);
  if (denominator(k) != 1)
    fail("inconsistent-result", "anticanonical pairing is not integral: " + to_string(k));
  return p.dim_v() - p.rank - p.num_roots() + numerator(k).convert_to<std::int64_t>();
}

std::int64_t virtual_dimension(const DegreeVector& delta_t, const GitPresentation& p) {
  return p.dim_v() - p.rank - p.num_roots() + pairing(delta_t, anticanonical(p));
}

std::int64_t toric_dimension_actual(const DegreeVector& delta_t, const GitPresentation& p) {
  if (!p.positive_roots.empty())
    fail("invalid-argument", "toric dimension requires a torus presentation");
  std::int64_t s = 0;
  for (const auto& w : p.weights) {
    std::int64_t m = pairing(delta_t, w);
    if (m >= 0) s += 1 + m;
  }
  return s - p.rank;
}

Complex generating_series_truncated(const GitPresentation& p, const Polynomial& insertion,
                                    const std::vector<Complex>& q_coords,
                                    std::int64_t kappa_bound, double* last_term) {
  if (q_coords.size() != p.degree_basis.size())
    fail("invalid-argument", "q has wrong length for the degree basis");
  const bool filterable = z_free(insertion) && insertion.is_homogeneous();
  const std::int64_t insertion_degree = insertion.total_degree();
  Complex series(0.0, 0.0);
  double last = 0.0;
  Rational deepest(-1);
  for (const auto& delta : enumerate_effective_degrees(p, kappa_bound)) {
    ScalarZ value(0);
    if (!filterable || virtual_dimension(delta, p) == insertion_degree)
      value = nonequivariant_sum(p, delta, insertion, nullptr, nullptr);
    if (value.is_zero()) continue;
    Complex qd(1.0, 0.0);
    for (std::size_t j = 0; j < q_coords.size(); ++j) {
      std::int64_t e = delta.pairings[j];
      for (std::int64_t k = 0; k < std::llabs(e); ++k) qd *= q_coords[j];
      if (e < 0) qd = Complex(1.0, 0.0) / qd;
    }
    Complex term = qd * to_double(value.as_rational()) * double(p.weyl_order);
    series += term;
    Rational depth = anticanonical_pairing(delta, p);
    if (depth > deepest) {
      deepest = depth;
      last = std::abs(term);
    }
  }
  if (last_term) *last_term = last;
  return series;
}

namespace {

nlohmann::json scalar_json(const ScalarZ& v) {
  nlohmann::json num = nlohmann::json::array();
  nlohmann::json den = nlohmann::json::array();
  for (const auto& c : v.num().coeffs()) num.push_back(to_string(c));
  for (const auto& c : v.den().coeffs()) den.push_back(to_string(c));
  if (v.num().is_zero()) num.push_back("0");
  return {{"num_z_coeffs", num}, {"den_z_coeffs", den}};
}

}  // namespace

std::string result_to_json(const InvariantResult& r) {
  nlohmann::json j;
  j["value"] = scalar_json(r.value);
  j["dualized_value"] = scalar_json(r.dualized_value);
  j["breakdown"] = nlohmann::json::array();
  for (const auto& t : r.breakdown) {
    nlohmann::json jt;
    jt["lift"] = t.lift.coords;
    if (t.has_split) jt["split"] = {t.split1.coords, t.split2.coords};
    jt["value"] = scalar_json(t.value);
    j["breakdown"].push_back(jt);
  }
  return j.dump(2);
}

}  // namespace qk
