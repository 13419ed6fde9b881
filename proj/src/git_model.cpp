#include "qk/git_model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "qk/errors.hpp"
#include "qk/linalg.hpp"

namespace qk {

namespace {

IntVec apply_generator(const std::vector<IntVec>& g, const IntVec& v) {
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += g[i][j] * v[j];
  return out;
}

// All subsets of {0..n-1} of the given size, in lexicographic order.
void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  if (size > n || size < 0) return;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int k = size - 1;
    while (k >= 0 && idx[k] == n - size + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Extreme rays of {x : h.x >= 0 for all h}, as primitive integer vectors.
std::vector<IntVec> rays_from_halfspaces(const std::vector<IntVec>& halfspaces, int r) {
  std::set<IntVec> rays;
  auto consider = [&](const IntVec& cand) {
    if (is_zero(cand)) return;
    for (int sign : {1, -1}) {
      IntVec v(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) v[i] = sign * cand[i];
      bool ok = true;
      for (const auto& h : halfspaces)
        if (dot(h, v) < 0) {
          ok = false;
          break;
        }
      if (ok) rays.insert(primitive(v));
    }
  };
  if (r == 1) {
    consider({1});
  } else {
    int n = static_cast<int>(halfspaces.size());
    for_each_subset(n, r - 1, [&](const std::vector<int>& idx) {
      std::vector<IntVec> sub;
      for (int i : idx) sub.push_back(halfspaces[i]);
      RatMat m = rat_matrix(sub);
      if (rank(m) != r - 1) return;
      auto ns = nullspace(m);
      if (ns.size() != 1) return;
      consider(primitive_integer(ns[0]));
    });
  }
  return {rays.begin(), rays.end()};
}

}  // namespace

bool Cone::contains(const IntVec& x) const {
  for (const auto& h : halfspaces)
    if (dot(h, x) < 0) return false;
  return true;
}

std::int64_t pairing(const DegreeVector& d, const CharacterVector& w) {
  return dot(d.coords, w.coords);
}

CharacterVector anticanonical(const GitPresentation& p) {
  IntVec s(p.rank, 0);
  for (const auto& w : p.weights)
    for (int i = 0; i < p.rank; ++i) s[i] += w.coords[i];
  return CharacterVector{s};
}

void GitPresentation::validate() const {
  if (rank <= 0) fail("invalid-argument", "rank must be positive");
  if (weights.empty()) fail("invalid-argument", "weight list is empty");
  auto check_dim = [&](const IntVec& v, const char* what) {
    if (static_cast<int>(v.size()) != rank)
      fail("invalid-argument", std::string(what) + " has wrong length");
  };
  std::vector<IntVec> wrows;
  for (const auto& w : weights) {
    check_dim(w.coords, "weight");
    wrows.push_back(w.coords);
  }
  if (qk::rank(rat_matrix(wrows)) != rank)
    fail("invalid-argument", "weights do not span the character lattice");
  for (const auto& a : positive_roots) check_dim(a.coords, "positive root");
  check_dim(stability.coords, "stability");
  if (degree_basis.empty()) fail("invalid-argument", "degree basis is empty");
  for (const auto& b : degree_basis) check_dim(b.coords, "degree basis element");
  if (weyl_order < 1) fail("invalid-argument", "weyl_order must be at least 1");
  if (positive_roots.empty() && weyl_order != 1)
    fail("invalid-argument", "a torus presentation must have weyl_order 1");

  std::multiset<IntVec> weight_set(wrows.begin(), wrows.end());
  std::set<IntVec> root_set;
  for (const auto& a : positive_roots) {
    root_set.insert(a.coords);
    IntVec neg(a.coords.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.coords[i];
    root_set.insert(neg);
  }
  for (const auto& g : weyl_generators) {
    if (static_cast<int>(g.size()) != rank)
      fail("invalid-argument", "weyl generator is not an r x r matrix");
    for (const auto& row : g) check_dim(row, "weyl generator row");
    std::multiset<IntVec> mapped_weights;
    for (const auto& w : wrows) mapped_weights.insert(apply_generator(g, w));
    if (mapped_weights != weight_set)
      fail("invalid-argument", "weyl generator does not permute the weights");
    for (const auto& a : root_set)
      if (!root_set.count(apply_generator(g, a)))
        fail("invalid-argument", "weyl generator does not preserve the roots");
    for (const auto& b : degree_basis)
      if (apply_generator(g, b.coords) != b.coords)
        fail("invalid-argument", "degree basis is not fixed by a weyl generator");
  }
}

Cone chamber(const GitPresentation& p) {
  const int r = p.rank;
  const IntVec& xi = p.stability.coords;
  std::vector<IntVec> halfspaces;
  std::set<IntVec> seen;
  if (r == 1) {
    if (xi[0] == 0) fail("degenerate-stability", "stability lies on a wall");
    halfspaces.push_back({xi[0] > 0 ? std::int64_t(1) : std::int64_t(-1)});
  } else {
    std::set<IntVec> distinct;
    for (const auto& w : p.weights) distinct.insert(w.coords);
    std::vector<IntVec> ws(distinct.begin(), distinct.end());
    int n = static_cast<int>(ws.size());
    for_each_subset(n, r - 1, [&](const std::vector<int>& idx) {
      std::vector<IntVec> sub;
      for (int i : idx) sub.push_back(ws[i]);
      RatMat m = rat_matrix(sub);
      if (rank(m) != r - 1) return;
      auto ns = nullspace(m);
      if (ns.size() != 1) return;
      IntVec normal = primitive_integer(ns[0]);
      std::int64_t s = dot(normal, xi);
      if (s == 0) fail("degenerate-stability", "stability lies on a wall of the arrangement");
      if (s < 0)
        for (auto& x : normal) x = -x;
      if (seen.insert(normal).second) halfspaces.push_back(normal);
    });
    if (halfspaces.empty())
      fail("degenerate-arrangement", "weights span no hyperplanes of codimension one");
  }
  std::sort(halfspaces.begin(), halfspaces.end());
  Cone c;
  c.halfspaces = halfspaces;
  c.generators = rays_from_halfspaces(halfspaces, r);
  return c;
}

Cone effective_cone(const GitPresentation& p) {
  Cone e;
  if (p.effective_cone_generators) {
    for (const auto& g : *p.effective_cone_generators) e.generators.push_back(primitive(g));
    e.halfspaces = rays_from_halfspaces(e.generators, p.rank);
  } else {
    Cone c = chamber(p);
    // The dual cone: generated by the chamber's halfspace normals and cut
    // out by the chamber's rays.
    e.generators = c.halfspaces;
    e.halfspaces = c.generators;
  }
  std::sort(e.generators.begin(), e.generators.end());
  std::sort(e.halfspaces.begin(), e.halfspaces.end());
  return e;
}

bool is_effective(const DegreeVector& d, const Cone& effective) {
  return effective.contains(d.coords);
}

bool is_effective(const DegreeVector& d, const GitPresentation& p) {
  return is_effective(d, effective_cone(p));
}

GDegree restrict_degree(const DegreeVector& d, const GitPresentation& p) {
  GDegree g;
  for (const auto& b : p.degree_basis) g.pairings.push_back(pairing(d, b));
  return g;
}

namespace {

// Pairing of any lift of delta with kappa; well defined because kappa is a
// rational combination of the degree basis (and an error otherwise).
Rational kappa_pairing(const GDegree& delta, const GitPresentation& p,
                       const CharacterVector& kappa) {
  const int r = p.rank;
  RatMat m(r, RatVec(p.degree_basis.size(), Rational(0)));
  for (std::size_t j = 0; j < p.degree_basis.size(); ++j)
    for (int i = 0; i < r; ++i) m[i][j] = Rational(p.degree_basis[j].coords[i]);
  RatVec rhs;
  for (int i = 0; i < r; ++i) rhs.push_back(Rational(kappa.coords[i]));
  auto c = solve(m, rhs);
  if (!c)
    fail("infinite-lifts",
         "anticanonical character is not spanned by the degree basis");
  Rational k(0);
  for (std::size_t j = 0; j < c->size(); ++j) k += (*c)[j] * Rational(delta.pairings[j]);
  return k;
}

// Per-coordinate box bound for effective lattice points x = sum t_j v_j with
// sum t_j m_j <= K, where m_j = <v_j, kappa> must be positive on every ray.
IntVec lift_box(const GitPresentation& p, const Cone& eff, const CharacterVector& kappa,
                const Rational& K) {
  std::vector<Rational> bounds(p.rank, Rational(0));
  for (const auto& v : eff.generators) {
    bool pairs_basis = false;
    for (const auto& b : p.degree_basis)
      if (dot(v, b.coords) != 0) pairs_basis = true;
    if (!pairs_basis)
      fail("infinite-lifts",
           "effective cone has a ray pairing trivially with the degree basis");
    std::int64_t m = dot(v, kappa.coords);
    if (m <= 0)
      fail("infinite-lifts",
           "anticanonical character is not positive on an effective ray");
    for (int i = 0; i < p.rank; ++i) {
      std::int64_t a = v[i] >= 0 ? v[i] : -v[i];
      bounds[i] += K / Rational(m) * Rational(a);
    }
  }
  IntVec box(p.rank);
  for (int i = 0; i < p.rank; ++i) {
    Int ceil_b = numerator(bounds[i]) / denominator(bounds[i]) + 1;
    box[i] = ceil_b.convert_to<std::int64_t>();
  }
  return box;
}

void box_scan(const IntVec& box, const std::function<void(const IntVec&)>& fn) {
  IntVec x(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) x[i] = -box[i];
  while (true) {
    fn(x);
    std::size_t k = 0;
    while (k < x.size() && x[k] == box[k]) x[k++] = -box[k - 1];
    if (k == x.size()) break;
    ++x[k];
  }
}

}  // namespace

Rational anticanonical_pairing(const GDegree& delta, const GitPresentation& p) {
  return kappa_pairing(delta, p, anticanonical(p));
}

std::vector<std::pair<DegreeVector, DegreeVector>> effective_splittings(
    const DegreeVector& d, const GitPresentation& p) {
  Cone eff = effective_cone(p);
  CharacterVector kappa = anticanonical(p);
  std::vector<std::pair<DegreeVector, DegreeVector>> out;
  if (!eff.contains(d.coords)) return out;
  // Both parts pair non-negatively with kappa, so each lies in the same box
  // as an effective lift of the full degree.
  IntVec box = lift_box(p, eff, kappa, Rational(dot(d.coords, kappa.coords)));
  box_scan(box, [&](const IntVec& x) {
    if (!eff.contains(x)) return;
    IntVec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = d.coords[i] - x[i];
    if (!eff.contains(y)) return;
    out.emplace_back(DegreeVector{y}, DegreeVector{x});
  });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<DegreeVector> enumerate_lifts(const GDegree& delta, const GitPresentation& p) {
  if (delta.pairings.size() != p.degree_basis.size())
    fail("invalid-argument", "degree has wrong length for the degree basis");
  Cone eff = effective_cone(p);
  CharacterVector kappa = anticanonical(p);
  Rational K = kappa_pairing(delta, p, kappa);
  std::vector<DegreeVector> lifts;
  if (K < 0) return lifts;
  IntVec box = lift_box(p, eff, kappa, K);
  box_scan(box, [&](const IntVec& x) {
    if (!eff.contains(x)) return;
    DegreeVector d{x};
    if (restrict_degree(d, p) == delta) lifts.push_back(d);
  });
  std::sort(lifts.begin(), lifts.end());
  return lifts;
}

std::vector<GDegree> enumerate_effective_degrees(const GitPresentation& p,
                                                 std::int64_t kappa_bound,
                                                 std::size_t point_cap) {
  Cone eff = effective_cone(p);
  CharacterVector kappa = anticanonical(p);
  if (kappa_bound < 0) return {};
  IntVec box = lift_box(p, eff, kappa, Rational(kappa_bound));
  std::size_t total = 1;
  for (auto b : box) {
    total *= static_cast<std::size_t>(2 * b + 1);
    if (total > point_cap)
      fail("bound-exceeded", "degree enumeration box exceeds the point cap");
  }
  std::set<IntVec> degrees;
  box_scan(box, [&](const IntVec& x) {
    if (!eff.contains(x)) return;
    if (dot(x, kappa.coords) > kappa_bound) return;
    degrees.insert(restrict_degree(DegreeVector{x}, p).pairings);
  });
  std::vector<GDegree> out;
  for (const auto& d : degrees) out.push_back(GDegree{d});
  return out;
}

bool validate_insertion(const Polynomial& insertion, const GitPresentation& p,
                        bool* unverified) {
  if (unverified) *unverified = false;
  if (p.weyl_generators.empty()) {
    if (unverified) *unverified = p.weyl_order > 1;
    return true;
  }
  for (const auto& g : p.weyl_generators) {
    // The generator acts on coordinates by the transpose: u_i -> sum_j g[j][i] u_j.
    RatMat a(p.rank, RatVec(p.rank, Rational(0)));
    for (int i = 0; i < p.rank; ++i)
      for (int j = 0; j < p.rank; ++j) a[i][j] = Rational(g[j][i]);
    if (!(insertion.substitute_linear(a) == insertion)) return false;
  }
  return true;
}

GitPresentation presentation_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail("invalid-argument", std::string("presentation JSON parse error: ") + e.what());
  }
  GitPresentation p;
  try {
    p.rank = j.at("rank").get<int>();
    for (const auto& w : j.at("weights"))
      p.weights.push_back(CharacterVector{w.get<IntVec>()});
    for (const auto& a : j.at("positive_roots"))
      p.positive_roots.push_back(CharacterVector{a.get<IntVec>()});
    p.weyl_order = j.at("weyl_order").get<std::int64_t>();
    if (j.contains("weyl_generators"))
      for (const auto& g : j["weyl_generators"])
        p.weyl_generators.push_back(g.get<std::vector<IntVec>>());
    p.stability = CharacterVector{j.at("stability").get<IntVec>()};
    for (const auto& b : j.at("degree_basis"))
      p.degree_basis.push_back(CharacterVector{b.get<IntVec>()});
    if (j.contains("effective_cone_generators"))
      p.effective_cone_generators = j["effective_cone_generators"].get<std::vector<IntVec>>();
    if (j.contains("label")) p.label = j["label"].get<std::string>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail("invalid-argument", std::string("presentation JSON: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace qk
