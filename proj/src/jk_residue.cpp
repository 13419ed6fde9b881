#include "qk/jk_residue.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "qk/errors.hpp"

namespace qk {

namespace {

struct RedTerm {
  ScalarZ coeff;
  Polynomial num;
  std::map<IntVec, int> den;  // primitive form -> power

  RedTerm(ScalarZ c, Polynomial n) : coeff(std::move(c)), num(std::move(n)) {}
};

RatMat forms_matrix(const std::vector<IntVec>& forms) { return rat_matrix(forms); }

// Transpose with the forms as columns, for solving eta = sum t_i * form_i.
RatMat forms_transpose(const std::vector<IntVec>& forms, int r) {
  RatMat m(r, RatVec(forms.size(), Rational(0)));
  for (std::size_t f = 0; f < forms.size(); ++f)
    for (int i = 0; i < r; ++i) m[i][f] = Rational(forms[f][i]);
  return m;
}

bool term_order(const BasicTerm& a, const BasicTerm& b) {
  if (a.basis_forms != b.basis_forms) return a.basis_forms < b.basis_forms;
  if (a.exponents != b.exponents) return a.exponents < b.exponents;
  return a.numerator_monomial < b.numerator_monomial;
}

}  // namespace

std::vector<BasicTerm> partial_fraction_reduce(const ArrangementFraction& f) {
  const int r = f.rank();
  for (const auto& d : f.denominator())
    if (!d.form.is_homogeneous())
      fail("invalid-argument", "partial_fraction_reduce requires homogeneous denominator forms");
  const int target = f.denominator_degree() - r;
  Polynomial component = f.numerator().homogeneous_component(target);
  std::vector<BasicTerm> out;
  if (component.is_zero()) return out;

  std::deque<RedTerm> work;
  {
    RedTerm t(ScalarZ(1), component);
    for (const auto& d : f.denominator()) t.den[d.form.linear] = d.power;
    work.push_back(std::move(t));
  }

  while (!work.empty()) {
    RedTerm t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero() || t.num.is_zero()) continue;
    std::vector<IntVec> forms;
    for (const auto& [form, power] : t.den) forms.push_back(form);
    const int k = static_cast<int>(forms.size());
    if (rank(forms_matrix(forms)) == k) {
      if (k < r) continue;  // residue functional kills non-spanning terms
      RatMat m = forms_matrix(forms);
      auto minv = inverse(m);
      Polynomial num_y = t.num.substitute_linear(*minv);
      std::vector<int> exps;
      for (const auto& form : forms) exps.push_back(t.den.at(form));
      for (const auto& [mono, c] : num_y.terms()) {
        BasicTerm b;
        b.coefficient = t.coeff * c;
        b.basis_forms = forms;
        b.exponents = exps;
        b.numerator_monomial = mono;
        out.push_back(std::move(b));
      }
      continue;
    }
    // Split against the lexicographically greatest form of a dependency,
    // moving denominator degree strictly upward in the form order.
    auto ns = nullspace(forms_transpose(forms, r));
    const RatVec& c = ns.front();
    int j = -1;
    for (int i = k - 1; i >= 0; --i)
      if (c[i] != 0) {
        j = i;
        break;
      }
    for (int i = 0; i < j; ++i) {
      if (c[i] == 0) continue;
      RedTerm nt(t.coeff * ScalarZ(-c[i] / c[j]), t.num);
      nt.den = t.den;
      if (--nt.den[forms[i]] == 0) nt.den.erase(forms[i]);
      ++nt.den[forms[j]];
      work.push_back(std::move(nt));
    }
  }
  std::sort(out.begin(), out.end(), term_order);
  return out;
}

namespace {

struct ConeTests {
  RatVec eta;                                  // possibly perturbed
  bool perturbed = false;
  std::map<std::vector<IntVec>, RatVec> bary;  // sigma -> coordinates of eta

  ConeTests(const std::vector<BasicTerm>& terms, RatVec eta0, int r) : eta(std::move(eta0)) {
    std::vector<std::vector<IntVec>> sigmas;
    for (const auto& t : terms)
      if (!bary.count(t.basis_forms)) {
        bary[t.basis_forms] = {};
        sigmas.push_back(t.basis_forms);
      }
    auto coords = [&](const std::vector<IntVec>& sigma, const RatVec& dir) {
      return *solve(forms_transpose(sigma, r), dir);
    };
    bool generic = true;
    for (const auto& s : sigmas) {
      bary[s] = coords(s, eta);
      for (const auto& x : bary[s])
        if (x == 0) generic = false;
    }
    if (generic || sigmas.empty()) return;
    perturbed = true;
    // Direction (1, b, b^2, ...) with b chosen so every cone solve moves off
    // its walls, then a step small enough not to cross any other wall.
    RatVec w;
    std::map<std::vector<IntVec>, RatVec> drift;
    for (Rational b(2);; b += 1) {
      w.clear();
      Rational p(1);
      for (int i = 0; i < r; ++i, p *= b) w.push_back(p);
      bool ok = true;
      for (const auto& s : sigmas) {
        drift[s] = coords(s, w);
        for (const auto& x : drift[s])
          if (x == 0) ok = false;
      }
      if (ok) break;
    }
    Rational eps(1);
    for (const auto& s : sigmas)
      for (std::size_t i = 0; i < bary[s].size(); ++i) {
        if (bary[s][i] == 0) continue;
        Rational crossing = -bary[s][i] / drift[s][i];
        if (crossing > 0 && crossing / 2 < eps) eps = crossing / 2;
      }
    for (int i = 0; i < r; ++i) eta[i] += eps * w[i];
    for (const auto& s : sigmas) bary[s] = coords(s, eta);
  }

  bool contains(const std::vector<IntVec>& sigma) const {
    for (const auto& x : bary.at(sigma))
      if (x <= 0) return false;
    return true;
  }
};

nlohmann::json rat_vec_json(const RatVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

ScalarZ jk_homogeneous(const ArrangementFraction& f, const RatVec& eta, std::string* trace) {
  const int r = f.rank();
  if (static_cast<int>(eta.size()) != r)
    fail("invalid-argument", "chamber direction has wrong length");
  std::vector<IntVec> all_forms;
  for (const auto& d : f.denominator()) {
    if (!d.form.is_homogeneous())
      fail("invalid-argument", "jk_homogeneous requires homogeneous denominator forms");
    all_forms.push_back(d.form.linear);
  }
  if (rank(rat_matrix(all_forms)) < r) {
    if (f.numerator().homogeneous_component(f.denominator_degree() - r).is_zero()) return ScalarZ(0);
    fail("degenerate-arrangement", "denominator forms do not span rank " + std::to_string(r));
  }
  auto terms = partial_fraction_reduce(f);
  ConeTests cones(terms, eta, r);
  nlohmann::json report;
  if (trace) {
    report["eta"] = rat_vec_json(eta);
    if (cones.perturbed) report["perturbed_eta"] = rat_vec_json(cones.eta);
    report["basic_terms"] = nlohmann::json::array();
  }
  ScalarZ total(0);
  for (const auto& t : terms) {
    bool pattern = true;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.numerator_monomial[i] != t.exponents[i] - 1) pattern = false;
    bool in_cone = cones.contains(t.basis_forms);
    ScalarZ contribution(0);
    if (pattern && in_cone) {
      Rational det = determinant(rat_matrix(t.basis_forms));
      if (det < 0) det = -det;
      contribution = t.coefficient * ScalarZ(Rational(1) / det);
      total += contribution;
    }
    if (trace) {
      nlohmann::json jt;
      jt["forms"] = t.basis_forms;
      jt["exponents"] = t.exponents;
      jt["numerator_monomial"] = t.numerator_monomial;
      jt["det"] = to_string(determinant(rat_matrix(t.basis_forms)));
      jt["in_cone"] = in_cone;
      jt["contribution"] = contribution.str();
      report["basic_terms"].push_back(jt);
    }
  }
  if (trace) {
    report["value"] = total.str();
    *trace = report.dump(2);
  }
  return total;
}

namespace {

Polynomial truncate(const Polynomial& p, int max_degree) {
  Polynomial out(p.rank());
  for (int d = 0; d <= max_degree; ++d) out = out + p.homogeneous_component(d);
  return out;
}

}  // namespace

ScalarZ jk_at_point(const ArrangementFraction& f, const std::vector<ScalarZ>& point,
                    const RatVec& eta, std::string* trace) {
  ArrangementFraction g = f.translate(point);
  std::vector<DenominatorFactor> vanishing;
  std::vector<DenominatorFactor> units;
  int d_vanishing = 0;
  for (const auto& d : g.denominator()) {
    if (d.form.constant.is_zero()) {
      vanishing.push_back(d);
      d_vanishing += d.power;
    } else {
      units.push_back(d);
    }
  }
  const int bound = d_vanishing - g.rank();
  if (bound < 0) {
    if (trace) *trace = "{\"value\":\"0\",\"reason\":\"no degree component\"}";
    return ScalarZ(0);
  }
  Polynomial num = truncate(g.numerator(), bound);
  for (const auto& u : units)
    num = truncate(num * unit_expand(u.form, u.power, bound), bound);
  ArrangementFraction h(std::move(num), vanishing);
  return jk_homogeneous(h, eta, trace);
}

}  // namespace qk
