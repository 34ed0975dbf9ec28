#include <doctest.h>

#include "helpers.hpp"
#include "trophodge/error.hpp"
#include "trophodge/io.hpp"

using namespace trophodge;

TEST_CASE("complex JSON round trip") {
  for (auto& [name, c] : fixtures::all()) {
    CAPTURE(name);
    std::string s = io::complex_json(c);
    PolyComplex back = io::parse_complex(s);
    CHECK(back.faces == c.faces);
    CHECK(back.rays == c.rays);
    CHECK(io::complex_json(back) == s);
  }
  std::string fan = io::fan_json(fixtures::fan_c());
  CHECK(io::is_fan_json(fan));
  Fan f = io::parse_fan(fan);
  CHECK(f.cones.size() == fixtures::fan_c().cones.size());
}

TEST_CASE("malformed complexes") {
  auto code = [](const std::string& s) {
    try {
      io::parse_complex(s);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  CHECK(code("{") == "malformed-json");
  CHECK(code(R"({"vertices": []})") == "schema");
  CHECK(code(R"({"lattice_rank":1,"vertices":[["0"]],"rays":[[2]],"faces":[{"vertices":[0]}]})") ==
        "non-primitive-ray");
  CHECK(code(R"({"lattice_rank":1,"vertices":[["0"]],"rays":[[1]],"faces":[{"vertices":[0],"rays":[0]}]})") ==
        "closure");
  CHECK(code(R"({"lattice_rank":1,"vertices":[["x"]],"rays":[],"faces":[]})") == "schema");
}

TEST_CASE("matroid JSON") {
  CHECK(io::is_matroid_json(R"({"type":"uniform","n":4,"r":3})"));
  CHECK(io::parse_matroid(R"({"type":"uniform","n":4,"r":3})").rank() == 3);
  CHECK(io::parse_matroid(R"({"type":"boolean","n":3})").rank() == 3);
  CHECK(io::parse_matroid(R"({"type":"graphic","edges":[[0,1],[1,2],[0,2]]})").rank() == 2);
  CHECK(io::parse_matroid(R"({"type":"bases","ground":3,"bases":[[0,1],[0,2],[1,2]]})").rank() == 2);
  CHECK_THROWS_AS(io::parse_matroid(R"({"type":"nope"})"), Error);
}

TEST_CASE("class JSON round trip") {
  for (auto& name : th::page_fixtures()) {
    CAPTURE(name);
    auto pg = th::page(name);
    int n = static_cast<int>(pg.st->dim());
    for (int p = 0; p <= n; ++p)
      for (auto& a : hodge_locus_basis(*pg.st, p)) {
        std::string s = io::class_json(*pg.st, a);
        HodgeClass b = io::parse_class(*pg.st, s);
        CHECK(to_kernel_vector(*pg.st, b) == to_kernel_vector(*pg.st, a));
        CHECK(io::class_json(*pg.st, b) == s);
      }
  }
  auto d = th::page("fixD");
  CHECK_THROWS_AS(io::parse_class(*d.st, R"({"p":1,"vertices":{"nowhere":{}}})"), Error);
}
