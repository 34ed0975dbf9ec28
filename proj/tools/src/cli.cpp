#include "trophodge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fmt/format.h>
#include <json.hpp>
#include <set>

#include "trophodge/checks.hpp"
#include "trophodge/chow.hpp"
#include "trophodge/clemens_schmid.hpp"
#include "trophodge/error.hpp"
#include "trophodge/fixtures.hpp"
#include "trophodge/hodge_cycles.hpp"
#include "trophodge/io.hpp"
#include "trophodge/matroid.hpp"
#include "trophodge/steenbrink.hpp"
#include "trophodge/trop_cohomology.hpp"

namespace trophodge::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::set<std::string> kInputErrors = {
    "malformed-json", "schema", "closure", "intersection", "non-primitive-ray", "not-a-fan",
    "non-unimodular-recession", "io-error", "unknown-fixture", "star-fan-not-Bergman", "usage"};

struct Options {
  std::string command;
  std::string input;
  std::string format = "json";
  std::string degrees = "all";
  int p = -1;
  std::string class_file;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int k = -1;
};

json conventions() {
  return {{"sign", "sign(gamma,delta) on both i* and Gys"},
          {"orientation", "HNF tangent bases, canonical multivectors"},
          {"mapping_cone", "d(x1,x2,x3) = (dx1 + Nx2, -dx2 + i x3, dK x3)"},
          {"rationals", "p/q strings"}};
}

json envelope(const Options& o, json result, bool ok) {
  return {{"command", o.command},
          {"version", TROPHODGE_VERSION},
          {"conventions", conventions()},
          {"input", o.input},
          {"ok", ok},
          {"result", std::move(result)}};
}

bool is_fixture(const std::string& s) {
  for (auto& [n, c] : fixtures::all())
    if (n == s) return true;
  return s == "square" || s == "u34";
}

std::string input_text(const std::string& input) {
  if (fs::exists(input)) return io::read_file(input);
  if (is_fixture(input)) return io::complex_json(fixtures::by_name(input));
  throw Error("io-error", "no such file or fixture: " + input);
}

PolyComplex load_complex(const std::string& input) { return io::parse_complex(input_text(input)); }

Fan load_fan(const std::string& input) {
  std::string text = input_text(input);
  if (io::is_matroid_json(text)) return bergman_fan(io::parse_matroid(text));
  PolyComplex c = io::parse_complex(text);
  if (c.vertices.size() != 1 || !is_zero(c.vertices[0])) throw Error("schema", "input is not a fan");
  std::vector<Subset> cones;
  for (auto& f : c.faces) cones.push_back(f.rays);
  Fan f = make_fan(c.n, c.rays, cones);
  validate_fan(f);
  return f;
}

json weights_json(const FaceComplex& x, const std::vector<std::size_t>& faces, const Vec& w) {
  json m = json::object();
  for (std::size_t i = 0; i < faces.size(); ++i) m[x.labels[faces[i]]] = to_string(w[i]);
  return m;
}

std::string pad(const std::string& s, std::size_t w) { return fmt::format("{:>{}}", s, w); }

// ---- commands; each returns (result, ok) and writes its table form

struct Out {
  json result;
  bool ok = true;
  std::string table;
};

Out cmd_chow(const Options& o) {
  Fan f = load_fan(o.input);
  ChowRing r(f);
  Out res;
  json dims = json::object();
  res.table = "p  dim A^p\n";
  for (std::size_t p = 0; p <= r.top(); ++p) {
    if (o.degrees != "all" && o.degrees != std::to_string(p)) continue;
    dims[std::to_string(p)] = r.dim(p);
    res.table += fmt::format("{:<2} {}\n", p, r.dim(p));
  }
  if (o.degrees != "all" && dims.empty()) throw Error("usage", "degree out of range: " + o.degrees);
  res.result = {{"dims", dims}, {"degree_map", r.has_degree_map()}};
  return res;
}

Out cmd_mw(const Options& o) {
  PolyComplex c = load_complex(o.input);
  FaceComplex x = compactify(c);
  if (o.k < 0 || static_cast<std::size_t>(o.k) > x.dim()) throw Error("usage", "-k out of range");
  auto k = static_cast<std::size_t>(o.k);
  auto faces = open_k_faces(x, k);
  Subspace mw = minkowski_weights(x, k);
  Out res;
  json basis = json::array();
  res.table = fmt::format("MW_{} rank {}\n", k, mw.dim());
  for (auto& w : mw.basis) {
    basis.push_back(weights_json(x, faces, w));
    std::string line;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (w[i] != 0) line += fmt::format(" {}:{}", x.labels[faces[i]], to_string(w[i]));
    res.table += " " + line + "\n";
  }
  res.result = {{"k", k}, {"rank", mw.dim()}, {"basis", basis}};
  return res;
}

Out cmd_cohomology(const Options& o) {
  FaceComplex x = compactify(load_complex(o.input));
  TropicalComplex t(x);
  Out res;
  json h = json::array();
  res.table = "h^{p,q}, p down, q across\n";
  for (std::size_t p = 0; p <= x.dim(); ++p) {
    auto row = t.hodge_numbers(p);
    h.push_back(row);
    std::string line;
    for (auto v : row) line += pad(std::to_string(v), 4);
    res.table += line + "\n";
  }
  res.result = {{"dim", x.dim()}, {"hodge", h}};
  return res;
}

Out cmd_steenbrink(const Options& o) {
  FaceComplex x = compactify(load_complex(o.input));
  SteenbrinkPage st(x);
  const int n = static_cast<int>(st.dim());
  Out res;
  json blocks = json::array();
  res.table = "blocks (a,b,s): dim\n";
  for (auto* b : st.blocks()) {
    if (!b->dim) continue;
    blocks.push_back({{"a", b->a}, {"b", b->b}, {"s", b->s}, {"dim", b->dim}});
    res.table += fmt::format("  ({},{},{}): {}\n", b->a, b->b, b->s, b->dim);
  }
  json rows = json::object();
  res.table += "row cohomology H^a(ST^{.,b})\n";
  for (int b = 0; b <= 2 * n; b += 2) {
    json r = json::object();
    std::string line = fmt::format("  b={}:", b);
    for (auto& [a, dim] : st.row_cohomology(b)) {
      r[std::to_string(a)] = dim;
      line += fmt::format(" {}", dim);
    }
    rows[std::to_string(b)] = r;
    res.table += line + "\n";
  }
  HlReport hl = verify_hl(st);
  json hlj = json::array();
  res.table += "hard Lefschetz N^k : (-k,b) -> (k,b-2k)\n";
  for (auto& e : hl.entries) {
    hlj.push_back({{"k", e.k}, {"b", e.b}, {"page", e.page}, {"cohomology", e.cohomology}});
    res.table += fmt::format("  k={} b={} page={} cohomology={}\n", e.k, e.b, e.page ? "ok" : "FAIL",
                             e.cohomology ? "ok" : "FAIL");
  }
  json sr = json::array();
  res.table += "H_s / H_rel dims\n";
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      auto [s, r] = surviving_relative(st, p, q);
      sr.push_back({{"p", p}, {"q", q}, {"surviving", s}, {"relative", r}});
      res.table += fmt::format("  ({},{}): {} / {}\n", p, q, s, r);
    }
  res.ok = hl.ok();
  res.result = {{"dim", n}, {"blocks", blocks}, {"row_cohomology", rows}, {"hard_lefschetz", hlj},
                {"surviving_relative", sr}};
  return res;
}

json junctions_json(const ExactnessReport& r, std::string& table) {
  json js = json::array();
  for (auto& j : r.junctions) {
    js.push_back({{"label", j.label}, {"dim", j.dim}, {"image_rank", j.image_rank},
                  {"kernel_dim", j.kernel_dim}, {"exact", j.exact}});
    table += fmt::format("  {:<24} dim={} im={} ker={} {}\n", j.label, j.dim, j.image_rank, j.kernel_dim,
                         j.exact ? "exact" : "NOT EXACT");
  }
  return js;
}

Out cmd_cs(const Options& o) {
  FaceComplex x = compactify(load_complex(o.input));
  SteenbrinkPage st(x);
  Out res;
  res.table = "tropical Clemens-Schmid\n";
  ExactnessReport r = tropical_clemens_schmid(st);
  json js = junctions_json(r, res.table);
  res.table += fmt::format("  d^0 lift independent: {}\n", r.lift_independent ? "yes" : "NO");
  ExactnessReport ab = clemens_schmid_sequences(random_triple(o.seed), o.seed);
  res.table += fmt::format("random triple (seed {})\n", o.seed);
  json jr = junctions_json(ab, res.table);
  res.ok = r.ok() && ab.ok();
  res.result = {{"tropical", {{"junctions", js}, {"lift_independent", r.lift_independent}}},
                {"random", {{"seed", o.seed}, {"junctions", jr}, {"lift_independent", ab.lift_independent}}}};
  return res;
}

Out cmd_hodge(const Options& o) {
  FaceComplex x = compactify(load_complex(o.input));
  SteenbrinkPage st(x);
  const int n = static_cast<int>(st.dim());
  std::vector<HodgeClass> classes;
  if (!o.class_file.empty()) {
    HodgeClass a = io::parse_class(st, io::read_file(o.class_file));
    if (o.p >= 0 && a.p != o.p) throw Error("schema", "class degree does not match --p");
    classes.push_back(a);
  } else {
    for (int p = 0; p <= n; ++p)
      if (o.p < 0 || o.p == p)
        for (auto& a : hodge_locus_basis(st, p)) classes.push_back(a);
    if (o.p > n) throw Error("usage", "--p out of range");
  }
  Out res;
  json items = json::array();
  for (auto& a : classes) {
    TropicalCycle c = hodge_to_cycle(st, a);
    bool bal = is_balanced(x, c.k, c.weights);
    bool ver = verify_class(st, a, c);
    res.ok = res.ok && bal && ver;
    items.push_back({{"class", json::parse(io::class_json(st, a))},
                     {"cycle", {{"p", c.p}, {"weights", weights_json(x, c.faces, c.weights)}}},
                     {"verification", {{"balanced", bal}, {"verified", ver}}}});
    std::string line = fmt::format("p={} cycle:", a.p);
    for (std::size_t i = 0; i < c.faces.size(); ++i)
      if (c.weights[i] != 0) line += fmt::format(" {}:{}", x.labels[c.faces[i]], to_string(c.weights[i]));
    res.table += line + fmt::format("  [{}]\n", bal && ver ? "verified" : "FAILED");
  }
  res.result = {{"cycles", items}};
  return res;
}

Out cmd_check_all(const Options& o) {
  FaceComplex x = compactify(load_complex(o.input));
  Out res;
  json checks = json::array();
  for (auto& c : check_all(x, o.seed)) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    res.ok = res.ok && c.ok;
    res.table += fmt::format("{:<26} {}{}\n", c.name, c.ok ? "pass" : "FAIL",
                             c.detail.empty() ? "" : "  (" + c.detail + ")");
  }
  res.result = {{"seed", o.seed}, {"checks", checks}};
  return res;
}

Out cmd_fixtures(const Options& o) {
  fs::create_directories(o.out_dir);
  Out res;
  json files = json::array();
  for (auto& [name, c] : fixtures::all()) {
    std::string path = (fs::path(o.out_dir) / (name + ".json")).string();
    io::write_file(path, io::complex_json(c));
    files.push_back(name + ".json");
    res.table += path + "\n";
  }
  res.result = {{"files", files}};
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"tropical Hodge classes, Steenbrink pages and Clemens-Schmid checks", "trophodge"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");
  auto input = [&](CLI::App* s) { s->add_option("input", o.input, "complex JSON file or fixture name")->required(); };

  auto* chow = app.add_subcommand("chow", "Chow ring dimensions of a fan or matroid");
  input(chow);
  chow->add_option("--degrees", o.degrees, "all or a single degree");
  auto* mw = app.add_subcommand("mw", "Minkowski weight basis");
  input(mw);
  mw->add_option("-k", o.k, "dimension")->required();
  input(app.add_subcommand("cohomology", "tropical Hodge diamond"));
  input(app.add_subcommand("steenbrink", "Steenbrink page report"));
  input(app.add_subcommand("cs-check", "Clemens-Schmid exactness"));
  auto* hc = app.add_subcommand("hodge-cycle", "Hodge classes to tropical cycles");
  input(hc);
  hc->add_option("--p", o.p, "degree");
  hc->add_option("--class", o.class_file, "class JSON file");
  input(app.add_subcommand("check-all", "every invariant on one complex"));
  auto* fx = app.add_subcommand("fixtures", "write the fixture complexes as JSON");
  fx->add_option("--out", o.out_dir, "output directory");
  for (auto* s : app.get_subcommands({})) {
    s->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    s->add_option("--seed", o.seed, "seed for randomized checks");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kBadInput;
  }
  o.command = app.get_subcommands().front()->get_name();

  Out res;
  try {
    if (o.command == "chow") res = cmd_chow(o);
    else if (o.command == "mw") res = cmd_mw(o);
    else if (o.command == "cohomology") res = cmd_cohomology(o);
    else if (o.command == "steenbrink") res = cmd_steenbrink(o);
    else if (o.command == "cs-check") res = cmd_cs(o);
    else if (o.command == "hodge-cycle") res = cmd_hodge(o);
    else if (o.command == "check-all") res = cmd_check_all(o);
    else res = cmd_fixtures(o);
  } catch (const Error& e) {
    json j{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    if (o.format == "json") out << j.dump(2) << "\n";
    else err << "error [" << e.code() << "]: " << e.what() << "\n";
    return kInputErrors.count(e.code()) ? kBadInput : kFailed;
  }

  if (o.format == "json") {
    out << envelope(o, res.result, res.ok).dump(2) << "\n";
  } else {
    out << fmt::format("trophodge {} {} {}\n", TROPHODGE_VERSION, o.command, o.input) << res.table;
    if (!res.ok) out << "verification FAILED\n";
  }
  return res.ok ? kOk : kFailed;
}

}  // namespace trophodge::cli
