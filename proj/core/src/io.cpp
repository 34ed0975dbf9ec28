#include "trophodge/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "trophodge/error.hpp"

namespace trophodge::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed-json", e.what());
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error("schema", std::string("missing key ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error("schema", std::string("bad value for ") + key);
  }
}

Rational rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw Error("schema", "rationals must be strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw Error("schema", "bad rational " + j.get<std::string>());
  }
}

IVec ivec(const json& j) {
  if (!j.is_array()) throw Error("schema", "ray must be an array");
  IVec v;
  for (auto& e : j) {
    if (!e.is_number_integer()) throw Error("schema", "ray entries must be integers");
    v.emplace_back(e.get<long>());
  }
  return v;
}

json ivec_json(const IVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.get_si());
  return a;
}

Subset index_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  auto v = get<std::vector<long>>(j, key);
  Subset s;
  for (auto x : v) {
    if (x < 0) throw Error("schema", "negative index");
    s.push_back(static_cast<std::size_t>(x));
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io-error", "cannot write " + path);
  out << text;
}

PolyComplex parse_complex(const std::string& text) {
  json j = parse(text);
  PolyComplex c;
  long n = get<long>(j, "lattice_rank");
  if (n < 0) throw Error("schema", "negative lattice rank");
  c.n = static_cast<std::size_t>(n);
  for (auto& v : get<json>(j, "vertices")) {
    if (!v.is_array()) throw Error("schema", "vertex must be an array");
    Vec p;
    for (auto& e : v) p.push_back(rat(e));
    c.vertices.push_back(p);
  }
  for (auto& r : get<json>(j, "rays")) c.rays.push_back(ivec(r));
  bool fan = c.vertices.empty();
  if (fan) c.vertices.push_back(Vec(c.n, Rational(0)));
  for (auto& f : get<json>(j, "faces")) {
    PolyComplex::Cell cell{index_list(f, "vertices"), index_list(f, "rays")};
    if (fan) {
      if (!cell.vertices.empty()) throw Error("schema", "fan faces cannot list vertices");
      cell.vertices = {0};
    }
    c.faces.push_back(cell);
  }
  if (fan && std::none_of(c.faces.begin(), c.faces.end(), [](auto& f) { return f.rays.empty(); }))
    c.faces.insert(c.faces.begin(), PolyComplex::Cell{{0}, {}});
  validate(c);
  return c;
}

std::string complex_json(const PolyComplex& c) {
  json j;
  j["lattice_rank"] = c.n;
  j["vertices"] = json::array();
  for (auto& v : c.vertices) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_string(x));
    j["vertices"].push_back(a);
  }
  j["rays"] = json::array();
  for (auto& r : c.rays) j["rays"].push_back(ivec_json(r));
  j["faces"] = json::array();
  for (auto& f : c.faces) j["faces"].push_back({{"vertices", f.vertices}, {"rays", f.rays}});
  return j.dump(2) + "\n";
}

bool is_fan_json(const std::string& text) {
  json j = parse(text);
  return j.is_object() && j.contains("vertices") && j["vertices"].is_array() && j["vertices"].empty();
}

Fan parse_fan(const std::string& text) {
  PolyComplex c = parse_complex(text);
  if (c.vertices.size() != 1 || !is_zero(c.vertices[0])) throw Error("schema", "a fan has no vertices");
  std::vector<Subset> cones;
  for (auto& f : c.faces) cones.push_back(f.rays);
  Fan f = make_fan(c.n, c.rays, cones);
  validate_fan(f);
  return f;
}

std::string fan_json(const Fan& f) {
  json j;
  j["lattice_rank"] = f.n;
  j["vertices"] = json::array();
  j["rays"] = json::array();
  for (auto& r : f.rays) j["rays"].push_back(ivec_json(r));
  j["faces"] = json::array();
  for (auto& c : f.cones) j["faces"].push_back({{"rays", c}});
  return j.dump(2) + "\n";
}

bool is_matroid_json(const std::string& text) {
  json j = parse(text);
  return j.is_object() && j.contains("type");
}

Matroid parse_matroid(const std::string& text) {
  json j = parse(text);
  auto type = get<std::string>(j, "type");
  auto size = [&](const char* k) {
    long v = get<long>(j, k);
    if (v < 0 || v > static_cast<long>(Matroid::kMaxGround)) throw Error("schema", std::string("bad ") + k);
    return static_cast<std::size_t>(v);
  };
  if (type == "uniform") {
    std::size_t n = size("n"), r = size("r");
    if (r > n) throw Error("schema", "rank exceeds ground set");
    return Matroid::uniform(n, r);
  }
  if (type == "boolean") return Matroid::boolean(size("n"));
  if (type == "graphic") {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto& e : get<std::vector<std::vector<long>>>(j, "edges")) {
      if (e.size() != 2 || e[0] < 0 || e[1] < 0) throw Error("schema", "edge must be a vertex pair");
      edges.emplace_back(e[0], e[1]);
    }
    return Matroid::graphic(edges);
  }
  if (type == "bases") {
    std::vector<Subset> bases;
    for (auto& b : get<std::vector<std::vector<std::size_t>>>(j, "bases")) {
      Subset s = b;
      std::sort(s.begin(), s.end());
      bases.push_back(s);
    }
    return Matroid::from_bases(size("ground"), bases);
  }
  throw Error("schema", "unknown matroid type " + type);
}

std::size_t face_by_label(const FaceComplex& x, const std::string& label) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.labels[i] == label) return i;
  throw Error("schema", "unknown face id " + label);
}

HodgeClass parse_class(const SteenbrinkPage& st, const std::string& text) {
  json j = parse(text);
  const FaceComplex& x = st.complex();
  long p = get<long>(j, "p");
  if (p < 0 || p > static_cast<long>(st.dim())) throw Error("schema", "degree out of range");
  HodgeClass a = zero_class(st, static_cast<int>(p));
  auto verts = get<json>(j, "vertices");
  if (!verts.is_object()) throw Error("schema", "vertices must be an object");
  for (auto& [label, monos] : verts.items()) {
    std::size_t v = face_by_label(x, label);
    auto it = a.vertices.find(v);
    if (it == a.vertices.end()) throw Error("schema", label + " is not a finite vertex");
    const ChowRing& r = st.local().ring(v);
    const StarFan& sf = st.local().star(v);
    if (!monos.is_object()) throw Error("schema", "monomials must be an object");
    for (auto& [m, coef] : monos.items()) {
      Subset rays;
      if (p > 0) {
        for (auto& part : split(m, '*')) {
          std::size_t f = face_by_label(x, part);
          auto ri = std::find(sf.ray_face.begin(), sf.ray_face.end(), f);
          if (ri == sf.ray_face.end()) throw Error("schema", part + " is not a ray of the star of " + label);
          rays.push_back(static_cast<std::size_t>(ri - sf.ray_face.begin()));
        }
      } else if (m != "1") {
        throw Error("schema", "degree 0 classes use the monomial 1");
      }
      std::sort(rays.begin(), rays.end());
      if (rays.size() != static_cast<std::size_t>(p)) throw Error("schema", "monomial " + m + " has the wrong degree");
      auto cone = sf.fan.find(rays);
      // non-cone monomials vanish
      if (!cone) continue;
      it->second = add(it->second, scale(r.cone_class(*cone), rat(coef)));
    }
  }
  return a;
}

std::string class_json(const SteenbrinkPage& st, const HodgeClass& a) {
  json j;
  j["p"] = a.p;
  j["vertices"] = json::object();
  for (auto& [v, alpha] : a.vertices) {
    json m = json::object();
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] != 0) m[st.local().monomial_label(v, static_cast<std::size_t>(a.p), i)] = to_string(alpha[i]);
    j["vertices"][st.complex().labels[v]] = m;
  }
  return j.dump(2) + "\n";
}

}  // namespace trophodge::io
