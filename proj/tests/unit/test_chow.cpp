#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "trophodge/chow.hpp"
#include "trophodge/fixtures.hpp"

using namespace trophodge;
using th::iv;

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::size_t ray_cone(const Fan& f, const IVec& r) {
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (f.rays[i] == r) return *f.find(Subset{i});
  throw std::runtime_error("ray not found");
}

}  // namespace

TEST_CASE("Chow dims match the brute-force oracle") {
  CHECK(ChowRing(fixtures::fan_a()).dims() == std::vector<std::size_t>{1, 1});
  CHECK(ChowRing(fixtures::fan_c()).dims() == std::vector<std::size_t>{1, 4, 1});
  CHECK(ChowRing(fixtures::fan_u34()).dims() == std::vector<std::size_t>{1, 7, 1});
  for (auto f : {fixtures::fan_a(), fixtures::fan_b(), fixtures::fan_c(), fixtures::fan_u34(),
                 bergman_fan(Matroid::boolean(4)), bergman_fan(Matroid::uniform(5, 3))}) {
    CHECK(ChowRing(f).dims() == oracle::chow_dims(f));
  }
}

TEST_CASE("permutohedral Chow dims are Eulerian numbers") {
  CHECK(ChowRing(bergman_fan(Matroid::boolean(4))).dims() == std::vector<std::size_t>{1, 11, 11, 1});
}

TEST_CASE("degree map") {
  ChowRing a(fixtures::fan_a());
  CHECK(a.degree(a.cone_class(ray_cone(a.fan(), iv({1, 0})))) == 1);
  CHECK(a.degree(Vec{Rational(0)}) == 0);
  ChowRing c(fixtures::fan_c());
  for (auto k : c.fan().cones_of_dim(2)) CHECK(c.degree(c.cone_class(k)) == 1);
  CHECK_THROWS_AS(c.degree(Vec{1, 0, 0, 0}), Error);
}

TEST_CASE("pairing") {
  ChowRing a(fixtures::fan_a());
  CHECK(a.pairing(0, a.unit(), a.cone_class(1)) == 1);
  CHECK(a.pairing(0, a.unit(), Vec{Rational(0)}) == 0);
  ChowRing c(fixtures::fan_c());
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g.set(i, j, c.pairing(1, unit_vec(4, i), unit_vec(4, j)));
  CHECK(rank(g) == 4);
  ChowRing u(fixtures::fan_u34());
  Matrix gu(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) gu.set(i, j, u.pairing(1, unit_vec(7, i), unit_vec(7, j)));
  CHECK(rank(gu) == 7);
}

TEST_CASE("product is commutative and associative on FIX-C") {
  ChowRing c(fixtures::fan_c());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(c.product(1, unit_vec(4, i), 1, unit_vec(4, j)) == c.product(1, unit_vec(4, j), 1, unit_vec(4, i)));
}

TEST_CASE("Minkowski weights") {
  Fan a = fixtures::fan_a();
  auto w = minkowski_weights(a, 1);
  REQUIRE(w.dim() == 1);
  CHECK(w.basis[0][0] == w.basis[0][1]);
  CHECK(w.basis[0][1] == w.basis[0][2]);
  CHECK(minkowski_weights(a, 0).dim() == 1);
  CHECK(minkowski_weights(fixtures::fan_c(), 1).dim() == 4);
  CHECK(minkowski_weights(fixtures::fan_u34(), 1).dim() == 7);
}

TEST_CASE("Chow and Minkowski weights are dual") {
  for (auto f : {fixtures::fan_a(), fixtures::fan_b(), fixtures::fan_c(), fixtures::fan_u34()}) {
    ChowRing r(f);
    for (std::size_t p = 0; p <= r.top(); ++p) {
      CAPTURE(p);
      auto d = chow_mw_duality(r, p);
      CHECK(d.evaluation_invertible);
      CHECK(d.poincare_invertible);
      CHECK(minkowski_weights(f, r.top() - p).dim() == r.dim(p));
    }
  }
  ChowRing a(fixtures::fan_a());
  auto d = chow_mw_duality(a, 1);
  CHECK(d.evaluation.rows() == 1);
  CHECK(d.evaluation.at(0, 0) != 0);
}

TEST_CASE("evaluation does not depend on the representative") {
  // x_rho - x_rho' is a relation on FIX-B; pairing with a weight is unchanged
  ChowRing b(fixtures::fan_b());
  auto w = minkowski_weights(b.fan(), 1);
  REQUIRE(w.dim() == 1);
  Vec x0 = b.cone_class(1), x1 = b.cone_class(2);
  CHECK(x0 == x1);
  CHECK(evaluate(b, 1, x0, w.basis[0]) == w.basis[0][0]);
  CHECK(evaluate(b, 1, x1, w.basis[0]) == w.basis[0][1]);
}

TEST_CASE("restriction and Gysin on stars") {
  FaceComplex e = compactify(fixtures::fix_e());
  LocalChow lc(e);
  auto v0 = th::open_face(e, {iv({0})});
  auto edge = th::open_face(e, {iv({0}), iv({1})});
  CHECK(lc.ring(v0).dim(1) == 1);
  CHECK(lc.ring(edge).dim(1) == 0);
  CHECK(lc.restriction(v0, edge, 1).rows() == 0);
  CHECK(lc.restriction(v0, edge, 0).at(0, 0) == 1);
  // Gysin of the unit is the ray class
  Matrix g = lc.gysin(v0, edge, 0);
  REQUIRE(g.rows() == 1);
  CHECK(g.at(0, 0) == 1);
  CHECK_THROWS_AS(lc.restriction(edge, v0, 0), Error);
}

TEST_CASE("projection formula and ring map on FIX-C and FIX-F stars") {
  for (auto c : {fixtures::fix_c(), fixtures::fix_f(), fixtures::fix_a()}) {
    FaceComplex x = compactify(c);
    LocalChow lc(x);
    for (std::size_t d = 0; d < x.size(); ++d)
      for (auto g : x.facets[d]) {
        if (x.faces[g].sed != x.faces[d].sed) continue;
        const ChowRing &rg = lc.ring(g), &rd = lc.ring(d);
        if (!rg.has_degree_map()) continue;
        for (std::size_t k = 0; k <= rd.top(); ++k) {
          std::size_t l = rg.top() - k - 1;
          const Matrix& gys = lc.gysin(g, d, k);
          const Matrix& res = lc.restriction(g, d, l);
          for (std::size_t i = 0; i < rd.dim(k); ++i)
            for (std::size_t j = 0; j < rg.dim(l); ++j) {
              Vec a = unit_vec(rd.dim(k), i), b = unit_vec(rg.dim(l), j);
              Rational lhs = rg.degree(rg.product(k + 1, gys.apply(a), l, b));
              Rational rhs = rd.degree(rd.product(k, a, l, res.apply(b)));
              CHECK(lhs == rhs);
            }
        }
        // restriction is multiplicative in degree 1 x 1
        if (rg.top() >= 2) {
          const Matrix& r1 = lc.restriction(g, d, 1);
          const Matrix& r2 = lc.restriction(g, d, 2);
          for (std::size_t i = 0; i < rg.dim(1); ++i)
            for (std::size_t j = 0; j < rg.dim(1); ++j) {
              Vec a = unit_vec(rg.dim(1), i), b = unit_vec(rg.dim(1), j);
              CHECK(r2.apply(rg.product(1, a, 1, b)) == rd.product(1, r1.apply(a), 1, r1.apply(b)));
            }
        }
      }
  }
}
