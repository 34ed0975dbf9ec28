#include <doctest.h>

#include "trophodge/fixtures.hpp"
#include "trophodge/matroid.hpp"

using namespace trophodge;

namespace {

std::vector<Subset> proper_flats(const Matroid& m) {
  auto lat = flats(m);
  std::vector<Subset> out;
  for (auto i : lat.proper()) out.push_back(lat.flats[i]);
  return out;
}

}  // namespace

TEST_CASE("flats") {
  CHECK(proper_flats(Matroid::uniform(3, 2)) == std::vector<Subset>{{0}, {1}, {2}});
  auto b3 = proper_flats(Matroid::boolean(3));
  CHECK(b3.size() == 6);
  CHECK(std::count_if(b3.begin(), b3.end(), [](auto& s) { return s.size() == 2; }) == 3);
  CHECK(proper_flats(Matroid::uniform(1, 1)).empty());
  CHECK(proper_flats(Matroid::uniform(4, 3)).size() == 10);
}

TEST_CASE("non-simple matroids are rejected") {
  auto m = Matroid::from_bases(3, {{0, 1}, {0, 2}});  // 1 and 2 parallel
  CHECK_FALSE(m.is_simple());
  CHECK_THROWS_AS(flats(m), Error);
  auto loop = Matroid::from_bases(3, {{0, 1}});
  CHECK_THROWS_AS(bergman_fan(loop), Error);
}

TEST_CASE("rank axioms hold for the constructors") {
  CHECK(Matroid::uniform(5, 3).check_axioms());
  CHECK(Matroid::boolean(4).check_axioms());
  CHECK(Matroid::graphic({{0, 1}, {1, 2}, {0, 2}, {2, 3}}).check_axioms());
  CHECK(Matroid::from_bases(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}).check_axioms());
}

TEST_CASE("graphic K3 is U23") {
  auto k3 = Matroid::graphic({{0, 1}, {1, 2}, {0, 2}});
  auto u = Matroid::uniform(3, 2);
  for (Matroid::Mask s = 0; s < 8; ++s) CHECK(k3.rank(s) == u.rank(s));
}

TEST_CASE("Bergman fans") {
  Fan a = fixtures::fan_a();
  CHECK(a.n == 2);
  std::vector<IVec> rays = a.rays;
  std::sort(rays.begin(), rays.end());
  std::vector<IVec> expect{{Integer(-1), Integer(-1)}, {Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  CHECK(rays == expect);
  CHECK(a.dim() == 1);

  Fan c = fixtures::fan_c();
  CHECK(c.rays.size() == 6);
  CHECK(c.cones_of_dim(2).size() == 6);
  CHECK(c.unimodular());

  Fan z = bergman_fan(Matroid::uniform(2, 1));
  CHECK(z.dim() == 0);
  CHECK(z.cones.size() == 1);

  Fan u = fixtures::fan_u34();
  CHECK(u.dim() == 2);
  CHECK(u.rays.size() == 10);
  CHECK(u.cones_of_dim(2).size() == 12);
  CHECK(u.unimodular());
  CHECK_NOTHROW(validate_fan(u));
}

TEST_CASE("Bergman fan dimension is rank minus one; cones count flags") {
  for (auto m : {Matroid::uniform(4, 2), Matroid::uniform(5, 3), Matroid::boolean(4),
                 Matroid::graphic({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}})}) {
    Fan f = bergman_fan(m);
    CHECK(f.dim() + 1 == m.rank());
    CHECK(f.unimodular());
    auto lat = flats(m);
    auto proper = lat.proper();
    // count flags of length 2 directly
    std::size_t pairs = 0;
    for (auto i : proper)
      for (auto j : proper)
        if (lat.flats[i].size() < lat.flats[j].size() &&
            std::includes(lat.flats[j].begin(), lat.flats[j].end(), lat.flats[i].begin(), lat.flats[i].end()))
          ++pairs;
    CHECK(f.cones_of_dim(1).size() == proper.size());
    CHECK(f.cones_of_dim(2).size() == pairs);
  }
}
