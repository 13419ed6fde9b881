#include "qk/presets.hpp"

#include <fstream>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

GitPresentation projective(int n) {
  if (n < 1) fail("invalid-argument", "projective preset needs n >= 1");
  GitPresentation p;
  p.rank = 1;
  for (int i = 0; i < n; ++i) p.weights.push_back({{1}});
  p.weyl_order = 1;
  p.stability = {{1}};
  p.degree_basis = {{{1}}};
  p.label = "p:" + std::to_string(n);
  p.validate();
  return p;
}

GitPresentation product_projective(const std::vector<int>& ns) {
  if (ns.empty()) fail("invalid-argument", "product preset needs at least one factor");
  const int r = static_cast<int>(ns.size());
  GitPresentation p;
  p.rank = r;
  std::string label = "pp:";
  for (int b = 0; b < r; ++b) {
    if (ns[b] < 1) fail("invalid-argument", "product preset needs positive factors");
    IntVec w(r, 0);
    w[b] = 1;
    for (int i = 0; i < ns[b]; ++i) p.weights.push_back({w});
    p.degree_basis.push_back({w});
    label += (b ? "," : "") + std::to_string(ns[b]);
  }
  p.weyl_order = 1;
  p.stability = {IntVec(r, 1)};
  p.label = label;
  p.validate();
  return p;
}

GitPresentation grassmannian(int r, int n) {
  if (r < 1 || r >= n) fail("invalid-argument", "grassmannian preset needs 1 <= r < n");
  GitPresentation p;
  p.rank = r;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    for (int k = 0; k < n; ++k) p.weights.push_back({e});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      IntVec a(r, 0);
      a[i] = 1;
      a[j] = -1;
      p.positive_roots.push_back({a});
    }
  p.weyl_order = 1;
  for (int k = 2; k <= r; ++k) p.weyl_order *= k;
  for (int i = 0; i + 1 < r; ++i) {
    // Adjacent transposition swapping coordinates i and i+1.
    std::vector<IntVec> g(r, IntVec(r, 0));
    for (int k = 0; k < r; ++k) g[k][k] = 1;
    g[i][i] = g[i + 1][i + 1] = 0;
    g[i][i + 1] = g[i + 1][i] = 1;
    p.weyl_generators.push_back(g);
  }
  p.stability = {IntVec(r, 1)};
  p.degree_basis = {{IntVec(r, 1)}};
  p.label = "gr:" + std::to_string(r) + "," + std::to_string(n);
  p.validate();
  return p;
}

GitPresentation custom_preset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("invalid-argument", "cannot open presentation file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return presentation_from_json(ss.str());
}

GitPresentation preset_from_spec(const std::string& spec) {
  auto parse_ints = [&](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail("invalid-argument", "bad preset parameter: " + tok);
      }
    }
    return out;
  };
  if (spec.rfind("p:", 0) == 0) {
    auto v = parse_ints(spec.substr(2));
    if (v.size() != 1) fail("invalid-argument", "p: takes one parameter");
    // p:n is P^n, cut out from n+1 coordinates.
    return projective(v[0] + 1);
  }
  if (spec.rfind("pp:", 0) == 0) {
    auto v = parse_ints(spec.substr(3));
    for (auto& n : v) ++n;
    return product_projective(v);
  }
  if (spec.rfind("gr:", 0) == 0) {
    auto v = parse_ints(spec.substr(3));
    if (v.size() != 2) fail("invalid-argument", "gr: takes two parameters");
    return grassmannian(v[0], v[1]);
  }
  return custom_preset(spec);
}

std::string preset_catalogue() {
  return "p:n        projective space P^n\n"
         "pp:a,b,..  product P^a x P^b x ...\n"
         "gr:r,n     Grassmannian Gr(r,n)\n"
         "<path>     presentation JSON file\n";
}

}  // namespace qk
