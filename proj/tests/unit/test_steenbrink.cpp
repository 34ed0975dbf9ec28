#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "trophodge/steenbrink.hpp"
#include "trophodge/trop_cohomology.hpp"

using namespace trophodge;

namespace {

std::map<std::tuple<int, int, int>, std::size_t> nonzero_blocks(const SteenbrinkPage& st) {
  std::map<std::tuple<int, int, int>, std::size_t> out;
  for (auto* b : st.blocks())
    if (b->dim) out[{b->a, b->b, b->s}] = b->dim;
  return out;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> u(-3, 3);
  Vec v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("Steenbrink blocks") {
  auto d = th::page("fixD");
  using Key = std::tuple<int, int, int>;
  CHECK(d.st->finite_faces().size() == 1);
  CHECK(nonzero_blocks(*d.st) == std::map<Key, std::size_t>{{{0, 0, 0}, 1}, {{0, 2, 0}, 1}});

  auto e = th::page("fixE");
  CHECK(e.st->finite_faces().size() == 3);
  CHECK(nonzero_blocks(*e.st) ==
        std::map<Key, std::size_t>{{{0, 0, 0}, 2}, {{0, 2, 0}, 2}, {{-1, 2, 1}, 1}, {{1, 0, 1}, 1}});

  auto sq = th::page("square");
  CHECK(sq.st->dim(-1, 2) == 5);
  CHECK(sq.st->dim(0, 2) == 12);
  CHECK(sq.st->dim(1, 2) == 5);
}

TEST_CASE("d^2 = 0 and [N, d] = 0") {
  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    const auto& st = *pg.st;
    int d = static_cast<int>(st.dim());
    for (int b = 0; b <= 2 * d; b += 2) {
      CHECK(st.row(b).is_complex());
      for (int a = -d; a < d; ++a) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK((st.istar(a + 1, b) * st.istar(a, b)).is_zero());
        CHECK((st.gysin(a + 1, b) * st.gysin(a, b)).is_zero());
        if (b >= 2) CHECK(st.monodromy(a + 1, b) * st.d(a, b) == st.d(a + 2, b - 2) * st.monodromy(a, b));
      }
    }
  }
}

TEST_CASE("Steenbrink row cohomology matches tropical Hodge numbers") {
  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    TropicalComplex t(*pg.x);
    int d = static_cast<int>(pg.st->dim());
    for (int p = 0; p <= d; ++p) {
      auto h = t.hodge_numbers(static_cast<std::size_t>(p));
      auto row = pg.st->row_cohomology(2 * p);
      for (int q = 0; q <= d; ++q) CHECK(row[q - p] == h[static_cast<std::size_t>(q)]);
      for (auto& [a, n] : row)
        if (a + p < 0 || a + p > d) CHECK(n == 0);
    }
    for (int b = 1; b <= 2 * d; b += 2)
      for (auto& [a, n] : pg.st->row_cohomology(b)) CHECK(n == 0);
  }
}

TEST_CASE("row cohomology does not depend on the triangulation") {
  auto d = th::page("fixD"), e = th::page("fixE");
  for (int b = 0; b <= 2; b += 2) CHECK(d.st->row_cohomology(b) == e.st->row_cohomology(b));
}

TEST_CASE("psi") {
  auto d = th::page("fixD");
  StElement one{0, 0, {Rational(1)}}, ray{0, 2, {Rational(1)}};
  CHECK(d.st->psi(one, ray) == 1);
  CHECK(d.st->psi(one, one) == 0);
  CHECK(SteenbrinkPage::epsilon(1, 2) == 1);
  CHECK(SteenbrinkPage::epsilon(0, 2) == -1);

  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    const auto& st = *pg.st;
    int n = static_cast<int>(st.dim());
    int sgn = n % 2 ? -1 : 1;
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> ua(-n, n), ub(0, n);
    for (int trial = 0; trial < 100; ++trial) {
      int a = ua(rng), b = 2 * ub(rng);
      StElement x{a, b, random_vec(rng, st.dim(a, b))};
      StElement y{-a, 2 * n - b, random_vec(rng, st.dim(-a, 2 * n - b))};
      CHECK(st.psi(x, y) == Rational(sgn) * st.psi(y, x));
      // N
      StElement yn{-a - 2, 2 * n - b + 2, random_vec(rng, st.dim(-a - 2, 2 * n - b + 2))};
      StElement nx{a + 2, b - 2, st.monodromy(a, b).apply(x.v)};
      StElement ny{-a, 2 * n - b, st.monodromy(-a - 2, 2 * n - b + 2).apply(yn.v)};
      CHECK(st.psi(nx, yn) + st.psi(x, ny) == 0);
      // d
      StElement yd{-a - 1, 2 * n - b, random_vec(rng, st.dim(-a - 1, 2 * n - b))};
      StElement dx{a + 1, b, st.d(a, b).apply(x.v)};
      StElement dy{-a, 2 * n - b, st.d(-a - 1, 2 * n - b).apply(yd.v)};
      CHECK(st.psi(dx, yd) + st.psi(x, dy) == 0);
    }
  }
}

TEST_CASE("kernel and cokernel complexes") {
  auto d = th::page("fixD");
  auto k = d.st->kernel_complex(2), r = d.st->cokernel_complex(2);
  CHECK(k.dim(0) == 1);
  CHECK(r.dim(0) == 1);
  CHECK(k.lo() == 0);
  CHECK(k.hi() == 0);
  CHECK(surviving_relative(*d.st, 1, 1) == std::pair<std::size_t, std::size_t>{1, 1});

  auto e = th::page("fixE");
  auto ke = e.st->kernel_complex(2);
  CHECK(ke.dim(0) == 2);
  CHECK(ke.dim(1) == 0);
  // two finite vertices, no edge class to glue them: H_s^{1,1} sees both
  CHECK(surviving_relative(*e.st, 1, 1).first == 2);
  CHECK(surviving_relative(*e.st, 0, 0).first == 1);

  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    int n = static_cast<int>(pg.st->dim());
    for (int b = 0; b <= 2 * n; b += 2) {
      auto kc = pg.st->kernel_complex(b), rc = pg.st->cokernel_complex(b);
      CHECK(kc.is_complex());
      CHECK(rc.is_complex());
      for (int a = -n; a < 0; ++a) CHECK(kc.dim(a) == 0);
      for (int a = 1; a <= n; ++a) CHECK(rc.dim(a) == 0);
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q < p; ++q) CHECK(surviving_relative(*pg.st, p, q).first == 0);
    }
  }
}

TEST_CASE("hard Lefschetz and primitive parts") {
  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    auto hl = verify_hl(*pg.st);
    CHECK(hl.ok());
    auto pp = primitive_parts(*pg.st);
    CHECK(pp.decomposition);
    CHECK(pp.orthogonal);
    int n = static_cast<int>(pg.st->dim());
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= 2 * n; b += 2) {
        int b2 = 2 * n - b + 2 * a;
        if (b2 > 2 * n) continue;
        Matrix g = cohomology_pairing(*pg.st, a, b);
        CHECK(g.rows() == g.cols());
        CHECK(rank(g) == g.rows());
      }
  }
  auto d = th::page("fixD");
  auto pd = primitive_parts(*d.st);
  CHECK(pd.dims.at({0, 2}) == 1);
  CHECK(pd.dims.at({0, 0}) == 1);
  CHECK(pd.dims.at({1, 0}) == 0);
  auto f = th::page("fixF");
  CHECK(primitive_parts(*f.st).dims.at({0, 2}) == 2);
  auto sq = th::page("square");
  CHECK(primitive_parts(*sq.st).dims.at({0, 2}) == 2);
}

TEST_CASE("star fans must look like Bergman fans") {
  Fan f = make_fan(2, {th::iv({1, 0}), th::iv({0, 1}), th::iv({-1, 0})}, {{0, 1}, {2}});
  FaceComplex x = compactify(fan_complex(f));
  CHECK_THROWS_WITH_AS(SteenbrinkPage{x}, doctest::Contains("star fan"), Error);
}
