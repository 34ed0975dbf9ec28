#include <doctest.h>

#include "helpers.hpp"
#include "trophodge/fixtures.hpp"

using namespace trophodge;
using th::iv;

TEST_CASE("fixtures validate") {
  for (auto& [name, c] : fixtures::all()) {
    CAPTURE(name);
    CHECK_NOTHROW(validate(c));
  }
}

TEST_CASE("validation rejects malformed complexes") {
  PolyComplex c = fixtures::fix_e();
  c.faces.pop_back();
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("closed"), Error);

  PolyComplex bad = fixtures::fix_d();
  bad.rays[0] = iv({2});
  CHECK_THROWS_AS(validate(bad), Error);

  PolyComplex half;
  half.n = 1;
  half.vertices = {{Rational(0)}, {Rational(1, 2)}};
  half.faces = {{{0}, {}}, {{1}, {}}, {{0, 1}, {}}};
  try {
    validate(half);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "not-unimodular");
  }
  PolyComplex wide;
  wide.n = 1;
  wide.vertices = {{Rational(0)}, {Rational(2)}};
  wide.faces = {{{0}, {}}, {{1}, {}}, {{0, 1}, {}}};
  CHECK_THROWS_AS(validate(wide), Error);
}

TEST_CASE("recession fans") {
  Fan e = recession_fan(fixtures::fix_e());
  CHECK(e.rays.size() == 2);
  CHECK(e.cones.size() == 3);
  CHECK(e.dim() == 1);

  PolyComplex seg;
  seg.n = 1;
  seg.vertices = {{Rational(0)}, {Rational(1)}};
  seg.faces = {{{0}, {}}, {{1}, {}}, {{0, 1}, {}}};
  Fan t = recession_fan(seg);
  CHECK(t.cones.size() == 1);

  Fan f = recession_fan(fixtures::fix_f());
  CHECK(f.cones_of_dim(2).size() == 4);
  CHECK(f.cones_of_dim(1).size() == 4);
}

TEST_CASE("overlapping cones are not a fan") {
  Fan f = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({-1, 0})}, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(validate_fan(f), doctest::Contains("overlap"), Error);
  CHECK_NOTHROW(validate_fan(fixtures::fan_c()));
  CHECK_NOTHROW(validate_fan(fixtures::fan_a()));
}

TEST_CASE("compactification of FIX-D is TP1") {
  FaceComplex x = compactify(fixtures::fix_d());
  CHECK(x.size() == 5);
  CHECK(th::count_dim(x, 0) == 3);
  CHECK(th::count_dim(x, 1) == 2);
  long chi = 0;
  for (auto& f : x.faces) chi += (f.dim % 2 ? -1 : 1);
  CHECK(chi == 1);
  std::size_t inf = 0;
  for (auto& f : x.faces)
    if (f.at_infinity()) {
      ++inf;
      CHECK(f.dim == 0);
      CHECK(f.sed.size() == 1);
    }
  CHECK(inf == 2);
  CHECK(x.finite_faces().size() == 1);
}

TEST_CASE("compactification of FIX-A and bounded complexes") {
  FaceComplex x = compactify(fixtures::fix_a());
  CHECK(x.size() == 7);
  std::size_t fin_v = 0, inf_v = 0, edges = 0;
  for (auto& f : x.faces) {
    if (f.dim == 0 && !f.at_infinity()) ++fin_v;
    if (f.dim == 0 && f.at_infinity()) ++inf_v;
    if (f.dim == 1) ++edges;
  }
  CHECK(fin_v == 1);
  CHECK(inf_v == 3);
  CHECK(edges == 3);

  PolyComplex seg;
  seg.n = 1;
  seg.vertices = {{Rational(0)}, {Rational(1)}};
  seg.faces = {{{0}, {}}, {{1}, {}}, {{0, 1}, {}}};
  CHECK(compactify(seg).size() == 3);
}

TEST_CASE("FIX-F compactification is the product poset") {
  FaceComplex x = compactify(fixtures::fix_f());
  CHECK(th::count_dim(x, 0) == 9);
  CHECK(th::count_dim(x, 1) == 12);
  CHECK(th::count_dim(x, 2) == 4);
  // open part reproduces the input
  CHECK(x.open_faces().size() == fixtures::fix_f().faces.size());
}

TEST_CASE("open part of the compactification matches the input") {
  for (auto& [name, c] : fixtures::all()) {
    CAPTURE(name);
    FaceComplex x = compactify(c);
    auto open = x.open_faces();
    REQUIRE(open.size() == c.faces.size());
    for (std::size_t i = 0; i < open.size(); ++i) {
      CHECK(open[i] == i);
      CHECK(x.faces[i].rep == i);
      CHECK(x.faces[i].dim == c.cell_dim(i));
    }
    for (std::size_t a = 0; a < c.faces.size(); ++a)
      for (std::size_t b = 0; b < c.faces.size(); ++b) CHECK(x.leq(a, b) == c.cell_leq(a, b));
  }
}

TEST_CASE("sign on the edge [0,1]") {
  FaceComplex x = compactify(fixtures::fix_e());
  auto v0 = th::open_face(x, {iv({0})});
  auto v1 = th::open_face(x, {iv({1})});
  auto e = th::open_face(x, {iv({0}), iv({1})});
  CHECK(sign(x, v0, e) == 1);
  CHECK(sign(x, v1, e) == -1);
  CHECK_THROWS_AS(sign(x, v0, v1), Error);
  CHECK(primitive_normal(x, v0, e) == iv({1}));
}

TEST_CASE("sign squared is one and boundary of boundary vanishes") {
  for (auto& [name, c] : fixtures::all()) {
    CAPTURE(name);
    FaceComplex x = compactify(c);
    for (std::size_t d = 0; d < x.size(); ++d) {
      for (auto g : x.facets[d]) {
        int s = sign(x, g, d);
        CHECK(s * s == 1);
      }
      // sum over chains e < g < d of signs, per e: must cancel
      std::map<std::size_t, int> acc;
      for (auto g : x.facets[d])
        for (auto e : x.facets[g]) acc[e] += sign(x, g, d) * sign(x, e, g);
      for (auto& [e, v] : acc) CHECK(v == 0);
    }
  }
}

TEST_CASE("primitive normals") {
  FaceComplex a = compactify(fixtures::fix_a());
  std::size_t origin = th::open_face(a, {iv({0, 0})});
  std::size_t ray = th::open_face(a, {iv({0, 0})}, {iv({1, 0})});
  CHECK(primitive_normal(a, origin, ray) == iv({1, 0}));

  PolyComplex tri;
  tri.n = 2;
  tri.vertices = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  tri.faces = {{{0, 1, 2}, {}}};
  close_under_faces(tri);
  FaceComplex t = compactify(tri);
  auto edge = th::open_face(t, {iv({0, 0}), iv({1, 0})});
  auto face = th::open_face(t, {iv({0, 0}), iv({1, 0}), iv({0, 1})});
  CHECK(primitive_normal(t, edge, face) == iv({1}));
}

TEST_CASE("star fans") {
  FaceComplex a = compactify(fixtures::fix_a());
  auto s = star_fan(a, th::open_face(a, {iv({0, 0})}));
  CHECK(s.fan.rays.size() == 3);
  CHECK(s.fan.n == 2);
  CHECK(s.fan.cones.size() == 4);

  FaceComplex e = compactify(fixtures::fix_e());
  auto s1 = star_fan(e, th::open_face(e, {iv({1})}));
  REQUIRE(s1.fan.rays.size() == 2);
  std::vector<IVec> rays = s1.fan.rays;
  std::sort(rays.begin(), rays.end());
  CHECK(rays == std::vector<IVec>{iv({-1}), iv({1})});

  // the edge above a point at infinity has sedentarity 0, so the star is trivial
  FaceComplex d = compactify(fixtures::fix_d());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.faces[i].at_infinity()) {
      auto st = star_fan(d, i);
      CHECK(st.fan.n == 0);
      CHECK(st.fan.cones.size() == 1);
    }
}

TEST_CASE("star fan cones biject with same-sedentarity cofaces") {
  for (auto& [name, c] : fixtures::all()) {
    FaceComplex x = compactify(c);
    for (std::size_t f = 0; f < x.size(); ++f) {
      auto s = star_fan(x, f);
      std::size_t cof = 0;
      for (std::size_t g = 0; g < x.size(); ++g)
        if (x.leq(f, g) && x.faces[g].sed == x.faces[f].sed) ++cof;
      CHECK(s.fan.cones.size() == cof);
      for (std::size_t i = 0; i < s.fan.cones.size(); ++i)
        for (std::size_t j = 0; j < s.fan.cones.size(); ++j) {
          bool sub = std::includes(s.fan.cones[j].begin(), s.fan.cones[j].end(), s.fan.cones[i].begin(),
                                   s.fan.cones[i].end());
          CHECK(sub == x.leq(s.cone_face[i], s.cone_face[j]));
        }
    }
  }
}
