#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "trophodge/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int c = trophodge::cli::run(args, out, err);
  return {c, out.str()};
}

fs::path scratch() {
  auto p = fs::temp_directory_path() / "trophodge_cli_test";
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("fixtures are written and reload") {
  auto dir = scratch() / "fx";
  auto r = run({"fixtures", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::size_t n = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    ++n;
    CHECK(run({"cohomology", e.path().string()}).code == 0);
  }
  CHECK(n == 6);
}

TEST_CASE("cohomology of fixA") {
  auto r = run({"cohomology", "fixA"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["hodge"] == json::parse("[[1,0],[0,1]]"));
  CHECK(j["version"].is_string());
  CHECK(j["conventions"].contains("sign"));
}

TEST_CASE("JSON output round-trips byte for byte and is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{{"chow", "fixC"},
                                                         {"mw", "fixF", "-k", "1"},
                                                         {"cohomology", "fixE"},
                                                         {"steenbrink", "fixE"},
                                                         {"cs-check", "fixD", "--seed", "5"},
                                                         {"hodge-cycle", "fixF", "--p", "1"},
                                                         {"check-all", "fixD"}}) {
    CAPTURE(args[0]);
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("chow accepts matroids and fans") {
  auto dir = scratch();
  std::ofstream(dir / "u34.json") << R"({"type":"uniform","n":4,"r":3})";
  auto r = run({"chow", (dir / "u34.json").string()});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["dims"] == json::parse(R"({"0":1,"1":7,"2":1})"));
  auto one = run({"chow", "fixC", "--degrees", "1"});
  CHECK(json::parse(one.out)["result"]["dims"] == json::parse(R"({"1":4})"));
}

TEST_CASE("hodge-cycle with a class file") {
  auto basis = json::parse(run({"hodge-cycle", "fixF", "--p", "1"}).out);
  auto items = basis["result"]["cycles"];
  REQUIRE(items.size() == 2);
  auto dir = scratch();
  std::ofstream(dir / "cls.json") << items[0]["class"].dump();
  auto r = run({"hodge-cycle", "fixF", "--class", (dir / "cls.json").string()});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["cycles"][0]["cycle"] == items[0]["cycle"]);
  CHECK(j["result"]["cycles"][0]["verification"]["verified"] == true);
}

TEST_CASE("exit codes") {
  auto dir = scratch();
  std::ofstream(dir / "bad.json") << "{";
  auto r = run({"cohomology", (dir / "bad.json").string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "malformed-json");
  std::ofstream(dir / "open.json")
      << R"({"lattice_rank":1,"vertices":[["0"]],"rays":[[1]],"faces":[{"vertices":[0],"rays":[0]}]})";
  r = run({"steenbrink", (dir / "open.json").string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "closure");
  CHECK(run({"cohomology", "no-such-input"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mw", "fixA", "-k", "9"}).code == 2);

  // a degree-0 class that is 5 at one vertex and 0 elsewhere fails the cocycle check
  std::ofstream(dir / "bad_class.json") << R"({"p":0,"vertices":{"3":{"1":"5"}}})";
  CHECK(run({"hodge-cycle", "fixE", "--class", (dir / "bad_class.json").string()}).code == 1);
}

TEST_CASE("check-all passes on fixF") {
  auto r = run({"check-all", "fixF", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
