#include <algorithm>

#include <doctest.h>

#include "qk/errors.hpp"
#include "qk/git_model.hpp"
#include "qk/presets.hpp"

using namespace qk;

TEST_CASE("pairing") {
  CHECK(pairing({{1, 0}}, {{3, 5}}) == 3);
  CHECK(pairing({{0, 0}}, {{-7, 9}}) == 0);
  CHECK(pairing({{1, 1}}, {{1, -1}}) == 0);
  CHECK_THROWS_AS(pairing({{1}}, {{1, 2}}), Error);
}

TEST_CASE("anticanonical") {
  CHECK(anticanonical(projective(2)).coords == IntVec{2});
  CHECK(anticanonical(grassmannian(2, 4)).coords == IntVec{4, 4});
  GitPresentation bad;
  bad.rank = 1;
  bad.stability = {{1}};
  bad.degree_basis = {{{1}}};
  CHECK_THROWS_AS(bad.validate(), Error);  // no weights
}

TEST_CASE("chamber of the shipped presets") {
  Cone c = chamber(grassmannian(2, 4));
  CHECK(c.generators == std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(c.contains({3, 5}));
  CHECK(!c.contains({-1, 2}));

  Cone ray = chamber(projective(3));
  CHECK(ray.generators == std::vector<IntVec>{{1}});

  GitPresentation flipped = grassmannian(2, 4);
  flipped.stability = {{1, -1}};
  flipped.weyl_generators.clear();  // the flipped stability is not symmetric anyway
  Cone fourth = chamber(flipped);
  CHECK(fourth.contains({2, -3}));
  CHECK(!fourth.contains({1, 1}));

  GitPresentation wall = grassmannian(2, 4);
  wall.stability = {{0, 1}};
  CHECK_THROWS_WITH_AS(chamber(wall), doctest::Contains("wall"), Error);
}

TEST_CASE("effectiveness") {
  GitPresentation p = grassmannian(2, 4);
  CHECK(is_effective(DegreeVector{{1, 0}}, p));
  CHECK(!is_effective(DegreeVector{{-1, 2}}, p));
  CHECK(is_effective(DegreeVector{{0, 0}}, p));
}

TEST_CASE("lift enumeration") {
  GitPresentation gr = grassmannian(2, 4);
  auto lifts = enumerate_lifts(GDegree{{1}}, gr);
  CHECK(lifts == std::vector<DegreeVector>{{{0, 1}}, {{1, 0}}});
  CHECK(enumerate_lifts(GDegree{{0}}, gr) == std::vector<DegreeVector>{{{0, 0}}});
  CHECK(enumerate_lifts(GDegree{{3}}, projective(4)) == std::vector<DegreeVector>{{{3}}});
  CHECK(enumerate_lifts(GDegree{{-2}}, projective(2)).empty());
}

TEST_CASE("lift enumeration agrees with a brute-force box scan") {
  for (const auto& p :
       {projective(3), grassmannian(2, 4), grassmannian(3, 4), product_projective({2, 3})}) {
    Cone eff = effective_cone(p);
    for (std::int64_t d1 = 0; d1 <= 2; ++d1) {
      GDegree delta{IntVec(p.degree_basis.size(), d1)};
      auto got = enumerate_lifts(delta, p);
      std::vector<DegreeVector> expect;
      const int B = 10;
      IntVec x(p.rank, -B);
      while (true) {
        if (eff.contains(x) && restrict_degree(DegreeVector{x}, p) == delta)
          expect.push_back(DegreeVector{x});
        int i = 0;
        while (i < p.rank && x[i] == B) x[i++] = -B;
        if (i == p.rank) break;
        ++x[i];
      }
      std::sort(expect.begin(), expect.end());
      CHECK(got == expect);
      for (const auto& lift : got) {
        CHECK(is_effective(lift, p));
        CHECK(restrict_degree(lift, p) == delta);
      }
    }
  }
}

TEST_CASE("unbounded lift sets are rejected") {
  // Weights {1, -1}: kappa = 0, the effective cone is the whole line.
  GitPresentation p;
  p.rank = 1;
  p.weights = {{{1}}, {{-1}}};
  p.weyl_order = 1;
  p.stability = {{1}};
  p.degree_basis = {{{1}}};
  p.effective_cone_generators = {{1}, {-1}};
  p.validate();
  CHECK_THROWS_WITH_AS(enumerate_lifts(GDegree{{0}}, p), doctest::Contains("effective ray"),
                       Error);
}

TEST_CASE("effective degree enumeration") {
  auto degrees = enumerate_effective_degrees(projective(2), 6);
  CHECK(degrees == std::vector<GDegree>{{{0}}, {{1}}, {{2}}, {{3}}});
  CHECK(enumerate_effective_degrees(grassmannian(2, 4), 4) ==
        std::vector<GDegree>{{{0}}, {{1}}});
  CHECK(enumerate_effective_degrees(grassmannian(2, 4), 0) == std::vector<GDegree>{{{0}}});
}

TEST_CASE("effective splittings cover both orders") {
  GitPresentation gr = grassmannian(2, 4);
  auto s = effective_splittings(DegreeVector{{1, 0}}, gr);
  // (1,0) = (1,0)+(0,0) = (0,0)+(1,0).
  REQUIRE(s.size() == 2);
  CHECK(s[0].second.coords == IntVec{0, 0});
  CHECK(s[1].second.coords == IntVec{1, 0});
  for (const auto& [a, b] : s) {
    CHECK(is_effective(a, gr));
    CHECK(is_effective(b, gr));
  }
}

TEST_CASE("insertion symmetry validation") {
  GitPresentation gr = grassmannian(2, 4);
  CHECK(validate_insertion(parse_polynomial("u1+u2", 2), gr));
  CHECK(!validate_insertion(parse_polynomial("u1", 2), gr));
  bool unverified = false;
  CHECK(validate_insertion(parse_polynomial("u1^2", 1), projective(3), &unverified));
  CHECK(!unverified);
}

TEST_CASE("presentation json round trip") {
  const char* text = R"({
    "rank": 2,
    "weights": [[1,0],[1,0],[0,1],[0,1]],
    "positive_roots": [],
    "weyl_order": 1,
    "stability": [1,1],
    "degree_basis": [[1,0],[0,1]],
    "label": "from-json"
  })";
  GitPresentation p = presentation_from_json(text);
  CHECK(p.rank == 2);
  CHECK(p.label == "from-json");
  CHECK(p.weights.size() == 4);
  CHECK_THROWS_AS(presentation_from_json("{"), Error);
  CHECK_THROWS_AS(presentation_from_json("{\"rank\": 1}"), Error);
}

TEST_CASE("weyl validation catches broken generators") {
  GitPresentation p = grassmannian(2, 4);
  p.weyl_generators = {{{1, 0}, {0, -1}}};  // not a weight symmetry
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("anticanonical is weyl fixed on presets") {
  GitPresentation p = grassmannian(3, 5);
  IntVec kappa = anticanonical(p).coords;
  for (const auto& g : p.weyl_generators) {
    IntVec mapped(p.rank, 0);
    for (int i = 0; i < p.rank; ++i)
      for (int j = 0; j < p.rank; ++j) mapped[i] += g[i][j] * kappa[j];
    CHECK(mapped == kappa);
  }
}
