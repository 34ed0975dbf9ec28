#include "trophodge/fixtures.hpp"

namespace trophodge::fixtures {

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

Vec pt(std::initializer_list<long> xs) {
  Vec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

PolyComplex build(std::size_t n, std::vector<Vec> verts, std::vector<IVec> rays,
                  std::vector<PolyComplex::Cell> cells) {
  PolyComplex c;
  c.n = n;
  c.vertices = std::move(verts);
  c.rays = std::move(rays);
  c.faces = std::move(cells);
  close_under_faces(c);
  return c;
}

}  // namespace

Fan fan_a() { return bergman_fan(Matroid::uniform(3, 2)); }
Fan fan_b() { return make_fan(1, {iv({1}), iv({-1})}, {{0}, {1}}); }
Fan fan_c() { return bergman_fan(Matroid::boolean(3)); }
Fan fan_u34() { return bergman_fan(Matroid::uniform(4, 3)); }

PolyComplex fix_a() { return fan_complex(fan_a()); }
PolyComplex fix_b() { return fan_complex(fan_b()); }
PolyComplex fix_c() { return fan_complex(fan_c()); }

PolyComplex fix_d() {
  return build(1, {pt({0})}, {iv({1}), iv({-1})}, {{{0}, {0}}, {{0}, {1}}});
}

PolyComplex fix_e() {
  return build(1, {pt({0}), pt({1})}, {iv({1}), iv({-1})}, {{{0, 1}, {}}, {{1}, {0}}, {{0}, {1}}});
}

PolyComplex fix_f() {
  return build(2, {pt({0, 0})}, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})},
               {{{0}, {0, 2}}, {{0}, {0, 3}}, {{0}, {1, 2}}, {{0}, {1, 3}}});
}

PolyComplex square() {
  return build(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})},
               {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})},
               {{{0, 1, 3}, {}}, {{0, 2, 3}, {}},
                {{1, 3}, {0}}, {{2, 3}, {2}}, {{0, 2}, {1}}, {{0, 1}, {3}},
                {{3}, {0, 2}}, {{2}, {1, 2}}, {{0}, {1, 3}}, {{1}, {0, 3}}});
}

std::vector<std::pair<std::string, PolyComplex>> all() {
  return {{"fixA", fix_a()}, {"fixB", fix_b()}, {"fixC", fix_c()},
          {"fixD", fix_d()}, {"fixE", fix_e()}, {"fixF", fix_f()}};
}

PolyComplex by_name(const std::string& name) {
  for (auto& [n, c] : all())
    if (n == name) return c;
  if (name == "u34") return fan_complex(fan_u34());
  if (name == "square") return square();
  throw Error("unknown-fixture", "no fixture named " + name);
}

}  // namespace trophodge::fixtures
