#include "qk/vafa_intriligator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "qk/errors.hpp"
#include "qk/invariants.hpp"
#include "qk/linalg.hpp"

namespace qk {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr double kJacobianTol = 1e-10;

std::vector<IntVec> standard_basis(int r) {
  std::vector<IntVec> b(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) b[i][i] = 1;
  return b;
}

std::vector<IntVec> resolve_basis(const std::vector<IntVec>& basis, int r) {
  if (basis.empty()) return standard_basis(r);
  if (static_cast<int>(basis.size()) != r)
    fail("invalid-argument", "cocharacter basis must have rank vectors");
  Rational det = determinant(rat_matrix(basis));
  if (det != 1 && det != -1)
    fail("invalid-argument", "cocharacter basis is not unimodular");
  return basis;
}

Complex ipow(Complex x, std::int64_t e) {
  Complex r(1.0, 0.0);
  for (std::int64_t k = 0; k < std::llabs(e); ++k) r *= x;
  return e < 0 ? Complex(1.0, 0.0) / r : r;
}

Complex weight_eval(const IntVec& w, const std::vector<Complex>& u) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) s += double(w[i]) * u[i];
  return s;
}

void check_weights(const std::vector<Complex>& u, const GitPresentation& p) {
  for (const auto& w : p.weights)
    if (std::abs(weight_eval(w.coords, u)) <= kWeightTol)
      fail("weight-vanishing", "a weight vanishes at the evaluation point");
}

Complex complex_det(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det(1.0, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) == 0.0) return Complex(0.0, 0.0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Complex f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

IntVec sum_positive_roots(const GitPresentation& p) {
  IntVec s(p.rank, 0);
  for (const auto& a : p.positive_roots)
    for (int i = 0; i < p.rank; ++i) s[i] += a.coords[i];
  return s;
}

// Integer lift of the j-th degree-lattice basis vector: a degree vector
// pairing 1 with degree_basis[j] and 0 with the others.
IntVec integer_lift(const GitPresentation& p, std::size_t j) {
  const int r = p.rank;
  const int range = 6;
  IntVec x(r, -range);
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < p.degree_basis.size(); ++k) {
      std::int64_t want = (k == j) ? 1 : 0;
      if (dot(x, p.degree_basis[k].coords) != want) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
    int i = 0;
    while (i < r && x[i] == range) x[i++] = -range;
    if (i == r) fail("invalid-argument", "no integer lift of a degree-basis coordinate found");
    ++x[i];
  }
}

void check_nonzero(const std::vector<Complex>& coords) {
  for (const auto& c : coords)
    if (std::abs(c) == 0.0) fail("invalid-argument", "dual torus coordinates must be nonzero");
}

}  // namespace

DualTorusPoint torus_point(std::vector<Complex> coords) {
  check_nonzero(coords);
  return {std::move(coords), "standard", {}};
}

DualTorusPoint torus_point(std::vector<Complex> coords, std::vector<IntVec> basis) {
  check_nonzero(coords);
  return {std::move(coords), "custom", std::move(basis)};
}

DualTorusPoint dual_group_point(std::vector<Complex> coords, const GitPresentation& p) {
  check_nonzero(coords);
  if (coords.size() != p.degree_basis.size())
    fail("invalid-argument", "dual group point has wrong length for the degree basis");
  return {std::move(coords), "dual-group", {}};
}

DualTorusPoint to_standard_torus(const DualTorusPoint& q, const GitPresentation& p) {
  if (q.basis_id == "standard") return q;
  std::vector<Complex> out(p.rank, Complex(1.0, 0.0));
  if (q.basis_id == "dual-group") {
    for (int i = 0; i < p.rank; ++i)
      for (std::size_t j = 0; j < p.degree_basis.size(); ++j)
        out[i] *= ipow(q.q_coords[j], p.degree_basis[j].coords[i]);
    return {out, "standard", {}};
  }
  // Custom cocharacter basis B: standard coordinate i is q^{e_i} with
  // e_i = sum_k c_k lambda_k, c = B^{-T} e_i, which is integral since B is
  // unimodular.
  auto basis = resolve_basis(q.basis, p.rank);
  RatMat bt(p.rank, RatVec(p.rank, Rational(0)));
  for (int k = 0; k < p.rank; ++k)
    for (int i = 0; i < p.rank; ++i) bt[i][k] = Rational(basis[k][i]);
  auto inv = inverse(bt);
  for (int i = 0; i < p.rank; ++i)
    for (int k = 0; k < p.rank; ++k) {
      Rational c = (*inv)[k][i];
      out[i] *= ipow(q.q_coords[k], numerator(c).convert_to<std::int64_t>());
    }
  return {out, "standard", {}};
}

DualTorusPoint p_map(const std::vector<Complex>& u, const GitPresentation& p,
                     const std::vector<IntVec>& basis) {
  check_weights(u, p);
  auto b = resolve_basis(basis, p.rank);
  std::vector<Complex> coords;
  for (int i = 0; i < p.rank; ++i) {
    Complex v(1.0, 0.0);
    for (const auto& rho : p.weights) v *= ipow(weight_eval(rho.coords, u), dot(b[i], rho.coords));
    coords.push_back(v);
  }
  return {coords, basis.empty() ? "standard" : "custom", basis};
}

Complex jacobian_dA(const std::vector<Complex>& u, const GitPresentation& p,
                    const std::vector<IntVec>& basis) {
  check_weights(u, p);
  auto b = resolve_basis(basis, p.rank);
  std::vector<std::vector<Complex>> m(p.rank, std::vector<Complex>(p.rank, Complex(0, 0)));
  for (const auto& rho : p.weights) {
    Complex rv = weight_eval(rho.coords, u);
    for (int i = 0; i < p.rank; ++i)
      for (int j = 0; j < p.rank; ++j)
        m[i][j] += double(dot(b[i], rho.coords)) * double(dot(b[j], rho.coords)) / rv;
  }
  return complex_det(m);
}

DualTorusPoint sigma_shift(const DualTorusPoint& q, const GitPresentation& p) {
  IntVec two_rho = sum_positive_roots(p);
  DualTorusPoint out = q;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < q.q_coords.size(); ++i) {
    std::int64_t s;
    if (q.basis_id == "dual-group")
      s = dot(integer_lift(p, i), two_rho);
    else
      s = dot(resolve_basis(q.basis, p.rank)[i], two_rho);
    out.q_coords[i] *= std::exp(Complex(0.0, pi * double(s)));
  }
  return out;
}

namespace {

bool fiber_less(const FiberSolution& a, const FiberSolution& b) {
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    if (a.u[i].real() != b.u[i].real()) return a.u[i].real() < b.u[i].real();
    if (a.u[i].imag() != b.u[i].imag()) return a.u[i].imag() < b.u[i].imag();
  }
  return false;
}

std::vector<FiberSolution> filter_fiber(std::vector<FiberSolution> fiber,
                                        const DualTorusPoint& q_std, const GitPresentation& p) {
  std::vector<FiberSolution> out;
  for (auto& s : fiber) {
    bool ok = true;
    for (const auto& rho : p.weights)
      if (std::abs(weight_eval(rho.coords, s.u)) <= kWeightTol) ok = false;
    if (!ok) continue;
    auto pv = p_map(s.u, p);
    for (int i = 0; i < p.rank; ++i)
      if (std::abs(pv.q_coords[i] - q_std.q_coords[i]) >= kResidualTol) ok = false;
    if (ok) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), fiber_less);
  return out;
}

}  // namespace

std::vector<FiberSolution> solve_fiber(const DualTorusPoint& q, const GitPresentation& p,
                                       const std::vector<std::vector<Complex>>* candidates) {
  DualTorusPoint qs = to_standard_torus(q, p);
  check_nonzero(qs.q_coords);
  const int r = p.rank;

  if (candidates) {
    std::vector<FiberSolution> fiber;
    for (auto u : *candidates) {
      for (int it = 0; it < 40; ++it) {  // Newton polish on p(u) - q
        std::vector<Complex> f(r);
        std::vector<std::vector<Complex>> jac(r, std::vector<Complex>(r, Complex(0, 0)));
        bool bad = false;
        for (const auto& rho : p.weights)
          if (std::abs(weight_eval(rho.coords, u)) <= kWeightTol) bad = true;
        if (bad) break;
        auto pv = p_map(u, p);
        for (int i = 0; i < r; ++i) f[i] = pv.q_coords[i] - qs.q_coords[i];
        // dp_i/du_j = p_i * sum_rho <e_i, rho> rho_j / rho(u)
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            Complex s(0.0, 0.0);
            for (const auto& rho : p.weights)
              s += double(rho.coords[i]) * double(rho.coords[j]) / weight_eval(rho.coords, u);
            jac[i][j] = pv.q_coords[i] * s;
          }
        // Solve jac * du = f by elimination.
        std::vector<std::vector<Complex>> aug = jac;
        for (int i = 0; i < r; ++i) aug[i].push_back(f[i]);
        for (int c = 0; c < r; ++c) {
          int piv = c;
          for (int rr = c + 1; rr < r; ++rr)
            if (std::abs(aug[rr][c]) > std::abs(aug[piv][c])) piv = rr;
          if (std::abs(aug[piv][c]) < 1e-300) {
            bad = true;
            break;
          }
          std::swap(aug[piv], aug[c]);
          for (int rr = 0; rr < r; ++rr) {
            if (rr == c) continue;
            Complex fac = aug[rr][c] / aug[c][c];
            for (int k = c; k <= r; ++k) aug[rr][k] -= fac * aug[c][k];
          }
        }
        if (bad) break;
        double step = 0.0;
        for (int i = 0; i < r; ++i) {
          Complex du = aug[i][r] / aug[i][i];
          u[i] -= du;
          step += std::abs(du);
        }
        if (step < 1e-14) break;
      }
      fiber.push_back({u});
    }
    // Dedupe polished points that converged together.
    auto out = filter_fiber(std::move(fiber), qs, p);
    std::vector<FiberSolution> unique;
    for (const auto& s : out) {
      bool dup = false;
      for (const auto& t : unique) {
        double d = 0.0;
        for (int i = 0; i < r; ++i) d += std::abs(s.u[i] - t.u[i]);
        if (d < 1e-7) dup = true;
      }
      if (!dup) unique.push_back(s);
    }
    return unique;
  }

  // Decoupling analysis: each standard p-coordinate equation must involve a
  // single u-coordinate, bijectively.
  std::vector<int> eq_coord(r, -1);
  std::vector<bool> used(r, false);
  for (int i = 0; i < r; ++i) {
    std::set<int> incident;
    for (const auto& rho : p.weights) {
      if (rho.coords[i] == 0) continue;  // exponent <e_i, rho>
      for (int j = 0; j < r; ++j)
        if (rho.coords[j] != 0) incident.insert(j);
    }
    if (incident.size() != 1)
      fail("unsupported-system", "p-coordinate " + std::to_string(i + 1) + " couples " +
                                     std::to_string(incident.size()) +
                                     " torus coordinates; supply candidate roots");
    eq_coord[i] = *incident.begin();
    if (used[eq_coord[i]])
      fail("unsupported-system",
           "two p-coordinates constrain the same torus coordinate; supply candidate roots");
    used[eq_coord[i]] = true;
  }

  std::vector<std::vector<Complex>> roots_per_coord(r);
  for (int i = 0; i < r; ++i) {
    const int j = eq_coord[i];
    std::int64_t degree = 0;
    Complex c(1.0, 0.0);
    for (const auto& rho : p.weights) {
      std::int64_t m = rho.coords[i];
      if (m == 0) continue;
      degree += m;
      c *= ipow(Complex(double(rho.coords[j]), 0.0), m);
    }
    if (degree == 0)
      fail("unsupported-system", "p-coordinate " + std::to_string(i + 1) + " is constant");
    Complex rhs = qs.q_coords[i] / c;
    if (degree < 0) rhs = Complex(1.0, 0.0) / rhs;
    std::int64_t n = std::llabs(degree);
    double mag = std::pow(std::abs(rhs), 1.0 / double(n));
    if (mag <= kWeightTol) fail("degenerate-q", "zero radicand in fiber extraction");
    double arg = std::arg(rhs) / double(n);
    const double pi = std::acos(-1.0);
    for (std::int64_t k = 0; k < n; ++k)
      roots_per_coord[j].push_back(std::polar(mag, arg + 2.0 * pi * double(k) / double(n)));
  }

  std::vector<FiberSolution> fiber;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    std::vector<Complex> u(r);
    for (int j = 0; j < r; ++j) u[j] = roots_per_coord[j][idx[j]];
    fiber.push_back({u});
    int j = 0;
    while (j < r && idx[j] + 1 == roots_per_coord[j].size()) idx[j++] = 0;
    if (j == r) break;
    ++idx[j];
  }
  return filter_fiber(std::move(fiber), qs, p);
}

Complex vi_sum(const Polynomial& insertion, const DualTorusPoint& q, const GitPresentation& p) {
  auto fiber = solve_fiber(q, p);
  Complex total(0.0, 0.0);
  for (const auto& s : fiber) {
    Complex d = jacobian_dA(s.u, p);
    if (std::abs(d) < kJacobianTol)
      fail("degenerate-q", "the Jacobian function vanishes on the fiber");
    Complex roots(1.0, 0.0);
    for (const auto& a : p.positive_roots) {
      Complex av = weight_eval(a.coords, s.u);
      roots *= -av * av;  // alpha * (-alpha)
    }
    Complex wprod(1.0, 0.0);
    for (const auto& rho : p.weights) wprod *= weight_eval(rho.coords, s.u);
    total += insertion.eval_at_zero_z(s.u) * roots / (d * wprod);
  }
  return total;
}

ViCheckReport vi_vs_series_check(const Polynomial& insertion, const DualTorusPoint& q,
                                 const GitPresentation& p, std::int64_t kappa_bound) {
  if (q.basis_id != "dual-group")
    fail("invalid-argument", "the series comparison needs a dual-group point");
  ViCheckReport rep;
  rep.q = q.q_coords;
  rep.kappa_bound = kappa_bound;
  rep.series_value =
      generating_series_truncated(p, insertion, q.q_coords, kappa_bound, &rep.last_term);
  DualTorusPoint sq = sigma_shift(q, p);
  rep.sigma_q = sq.q_coords;
  rep.vi_value = vi_sum(insertion, sq, p);
  rep.abs_diff = std::abs(rep.series_value - rep.vi_value);
  double scale = std::max(std::abs(rep.series_value), std::abs(rep.vi_value));
  rep.rel_diff = scale > 0 ? rep.abs_diff / scale : 0.0;
  return rep;
}

namespace {

nlohmann::json complex_vec_json(const std::vector<Complex>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back({c.real(), c.imag()});
  return a;
}

}  // namespace

std::string report_to_json(const ViCheckReport& r) {
  nlohmann::json j;
  j["q"] = complex_vec_json(r.q);
  j["sigma_q"] = complex_vec_json(r.sigma_q);
  j["series_value"] = {r.series_value.real(), r.series_value.imag()};
  j["vi_value"] = {r.vi_value.real(), r.vi_value.imag()};
  j["abs_diff"] = r.abs_diff;
  j["rel_diff"] = r.rel_diff;
  j["last_term"] = r.last_term;
  j["kappa_bound"] = r.kappa_bound;
  return j.dump(2);
}

}  // namespace qk
