#include "trophodge/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace trophodge {

namespace {

bool subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// all subsets of s, by size then lex
std::vector<Subset> power_set(const Subset& s) {
  std::vector<Subset> out;
  for (std::size_t k = 0; k <= s.size(); ++k)
    for (const auto& idx : subsets(s.size(), k)) {
      Subset t;
      for (auto i : idx) t.push_back(s[i]);
      out.push_back(std::move(t));
    }
  return out;
}

bool cone_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string join(const Subset& s, char sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// nonnegative nontrivial dependency among columns, via circuits
bool has_positive_circuit(const std::vector<IVec>& cols, std::size_t dim) {
  const std::size_t m = cols.size();
  if (m == 0) return false;
  if (m > 20) throw Error("too-large", "circuit enumeration limited to 20 vectors");
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<Vec> sel;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) sel.push_back(to_vec(cols[i]));
    if (sel.size() > dim + 1) continue;
    Subspace k = dim == 0 ? Subspace{sel.size(), {}} : kernel_basis(Matrix::from_columns(sel, dim));
    if (dim == 0) {
      // every vector is zero in a rank-0 quotient
      return true;
    }
    if (k.dim() != 1) continue;
    const Vec& v = k.basis[0];
    bool pos = true, neg = true;
    for (auto& x : v) {
      if (x <= 0) pos = false;
      if (x >= 0) neg = false;
    }
    if (pos || neg) return true;
  }
  return false;
}

}  // namespace

bool PolyComplex::cell_leq(std::size_t a, std::size_t b) const {
  return subset_of(faces[a].vertices, faces[b].vertices) && subset_of(faces[a].rays, faces[b].rays);
}

void close_under_faces(PolyComplex& c) {
  std::set<std::pair<Subset, Subset>> have;
  for (auto& f : c.faces) have.insert({f.vertices, f.rays});
  const std::size_t orig = c.faces.size();
  for (std::size_t i = 0; i < orig; ++i) {
    auto vs = power_set(c.faces[i].vertices);
    auto rs = power_set(c.faces[i].rays);
    for (auto& v : vs) {
      if (v.empty()) continue;
      for (auto& r : rs)
        if (have.insert({v, r}).second) c.faces.push_back({v, r});
    }
  }
}

void validate(const PolyComplex& c) {
  const std::size_t n = c.n;
  for (auto& v : c.vertices)
    if (v.size() != n) throw Error("schema", "vertex has wrong length");
  for (auto& r : c.rays) {
    if (r.size() != n) throw Error("schema", "ray has wrong length");
    if (gcd_of(r) != 1) throw Error("non-primitive-ray", "rays must be primitive and nonzero");
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      if (c.vertices[i] == c.vertices[j]) throw Error("intersection", "duplicate vertex");
  for (std::size_t i = 0; i < c.rays.size(); ++i)
    for (std::size_t j = i + 1; j < c.rays.size(); ++j)
      if (c.rays[i] == c.rays[j]) throw Error("intersection", "duplicate ray");

  std::set<std::pair<Subset, Subset>> have;
  for (auto& f : c.faces) {
    if (f.vertices.empty()) throw Error("schema", "face without vertices");
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      if (f.vertices[i] >= c.vertices.size()) throw Error("schema", "vertex index out of range");
      if (i && f.vertices[i] <= f.vertices[i - 1]) throw Error("schema", "face vertex list not strictly increasing");
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
      if (f.rays[i] >= c.rays.size()) throw Error("schema", "ray index out of range");
      if (i && f.rays[i] <= f.rays[i - 1]) throw Error("schema", "face ray list not strictly increasing");
    }
    if (!have.insert({f.vertices, f.rays}).second) throw Error("schema", "duplicate face");
  }
  for (auto& f : c.faces) {
    for (auto& v : power_set(f.vertices)) {
      if (v.empty()) continue;
      for (auto& r : power_set(f.rays))
        if (!have.count({v, r}))
          throw Error("closure", "complex is not closed under taking faces");
    }
    std::vector<IVec> gens;
    IVec v0;
    try {
      v0 = to_ivec(c.vertices[f.vertices[0]]);
      for (std::size_t i = 1; i < f.vertices.size(); ++i)
        gens.push_back(sub(to_ivec(c.vertices[f.vertices[i]]), v0));
    } catch (const Error&) {
      throw Error("not-unimodular", "face has non-integral vertices");
    }
    for (auto r : f.rays) gens.push_back(c.rays[r]);
    if (!is_unimodular_set(gens, n)) throw Error("not-unimodular", "face generators are not a lattice basis");
  }
}

// ---- fans ----

std::size_t Fan::dim() const {
  std::size_t d = 0;
  for (auto& c : cones) d = std::max(d, c.size());
  return d;
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].size() == k) out.push_back(i);
  return out;
}

std::optional<std::size_t> Fan::find(const Subset& s) const {
  auto it = std::lower_bound(cones.begin(), cones.end(), s, cone_less);
  if (it == cones.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - cones.begin());
}

bool Fan::unimodular() const {
  for (auto& c : cones) {
    std::vector<IVec> g;
    for (auto r : c) g.push_back(rays[r]);
    if (!is_unimodular_set(g, n)) return false;
  }
  return true;
}

Fan make_fan(std::size_t n, std::vector<IVec> rays, const std::vector<Subset>& cones) {
  Fan f;
  f.n = n;
  f.rays = std::move(rays);
  std::set<Subset> all;
  all.insert(Subset{});
  for (auto c : cones) {
    std::sort(c.begin(), c.end());
    for (auto& s : power_set(c)) all.insert(s);
  }
  f.cones.assign(all.begin(), all.end());
  std::sort(f.cones.begin(), f.cones.end(), cone_less);
  return f;
}

PolyComplex fan_complex(const Fan& f) {
  PolyComplex c;
  c.n = f.n;
  c.vertices.push_back(Vec(f.n, Rational(0)));
  c.rays = f.rays;
  for (auto& cone : f.cones) c.faces.push_back({Subset{0}, cone});
  return c;
}

void validate_fan(const Fan& f) {
  for (auto& c : f.cones) {
    std::vector<Vec> g;
    for (auto r : c) g.push_back(to_vec(f.rays[r]));
    if (!g.empty() && rank(Matrix::from_columns(g, f.n)) != g.size())
      throw Error("not-a-fan", "cone is not simplicial");
  }
  std::vector<const Subset*> maximal;
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < f.cones.size() && is_max; ++j)
      if (j != i && f.cones[j].size() > f.cones[i].size() && subset_of(f.cones[i], f.cones[j])) is_max = false;
    if (is_max) maximal.push_back(&f.cones[i]);
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const Subset &a = *maximal[i], &b = *maximal[j];
      Subset common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      std::vector<IVec> cg;
      for (auto r : common) cg.push_back(f.rays[r]);
      auto p = complement_projection(cg, f.n);
      std::vector<IVec> cols;
      for (auto r : a)
        if (!std::binary_search(common.begin(), common.end(), r)) cols.push_back(image(p, f.rays[r]));
      for (auto r : b)
        if (!std::binary_search(common.begin(), common.end(), r)) {
          IVec v = image(p, f.rays[r]);
          for (auto& x : v) x = -x;
          cols.push_back(v);
        }
      if (has_positive_circuit(cols, p.size()))
        throw Error("not-a-fan", "cones overlap improperly");
    }
}

Fan recession_fan(const PolyComplex& c) {
  std::vector<Subset> cones;
  for (auto& f : c.faces) cones.push_back(f.rays);
  Fan fan = make_fan(c.n, c.rays, cones);
  validate_fan(fan);
  return fan;
}

// ---- compactification ----

std::size_t FaceComplex::dim() const {
  std::size_t d = 0;
  for (auto& f : faces) d = std::max(d, f.dim);
  return d;
}

std::vector<std::size_t> FaceComplex::of_dim(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> FaceComplex::finite_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].bounded()) out.push_back(i);
  return out;
}

std::vector<std::size_t> FaceComplex::open_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (!faces[i].at_infinity()) out.push_back(i);
  return out;
}

const std::vector<IVec>& FaceComplex::stratum(const Subset& sed) const {
  auto it = strata_.find(sed);
  if (it == strata_.end()) throw Error("internal", "unknown stratum");
  return it->second;
}

Matrix FaceComplex::stratum_map(const Subset& from, const Subset& to) const {
  const auto& pf = stratum(from);
  const auto& pt = stratum(to);
  Matrix mf = to_matrix(pf, n), mt = to_matrix(pt, n);
  Matrix q(pt.size(), pf.size());
  for (std::size_t i = 0; i < pf.size(); ++i) {
    Vec e(pf.size(), Rational(0));
    e[i] = 1;
    auto x = solve(mf, e);
    if (!x) throw Error("internal", "stratum projection not surjective");
    Vec y = mt.apply(*x);
    for (std::size_t r = 0; r < y.size(); ++r) q.set(r, i, y[r]);
  }
  return q;
}

FaceComplex compactify(const PolyComplex& c) {
  validate(c);
  Fan rf = recession_fan(c);
  if (!rf.unimodular()) throw Error("non-unimodular-recession", "recession fan is not unimodular");

  FaceComplex x;
  x.n = c.n;
  x.rays = c.rays;

  using Key = std::tuple<Subset, std::vector<IVec>, std::vector<IVec>>;
  std::map<Key, std::size_t> cls;
  struct Pair {
    std::size_t cell;
    Subset sed;
    std::size_t cls;
  };
  std::vector<Pair> pairs;

  auto visit = [&](std::size_t g, const Subset& s) {
    if (!x.strata_.count(s)) {
      std::vector<IVec> gens;
      for (auto r : s) gens.push_back(c.rays[r]);
      x.strata_[s] = complement_projection(gens, c.n);
    }
    const auto& p = x.strata_[s];
    std::vector<IVec> pts, dirs;
    for (auto v : c.faces[g].vertices) pts.push_back(image(p, to_ivec(c.vertices[v])));
    for (auto r : c.faces[g].rays)
      if (!std::binary_search(s.begin(), s.end(), r)) dirs.push_back(primitive(image(p, c.rays[r])));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::sort(dirs.begin(), dirs.end());
    Key key{s, pts, dirs};
    auto it = cls.find(key);
    std::size_t id;
    if (it == cls.end()) {
      id = x.faces.size();
      cls.emplace(key, id);
      Face f;
      f.sed = s;
      f.rep = g;
      f.dim = c.cell_dim(g) - s.size();
      f.amb = c.n - s.size();
      f.points = pts;
      f.dirs = dirs;
      std::vector<IVec> gens;
      for (std::size_t i = 1; i < pts.size(); ++i) gens.push_back(sub(pts[i], pts[0]));
      for (auto& d : dirs) gens.push_back(d);
      f.tangent = hnf_rows(gens);
      if (f.tangent.size() != f.dim || !is_unimodular_set(gens, f.amb))
        throw Error("not-unimodular", "degenerate face in the compactification");
      f.normal_proj = complement_projection(f.tangent, f.amb);
      x.faces.push_back(std::move(f));
      x.labels.push_back(s.empty() ? std::to_string(g) : std::to_string(g) + "@" + join(s, '.'));
    } else {
      id = it->second;
    }
    pairs.push_back({g, s, id});
  };

  for (std::size_t g = 0; g < c.faces.size(); ++g) visit(g, {});
  for (std::size_t g = 0; g < c.faces.size(); ++g)
    for (auto& s : power_set(c.faces[g].rays))
      if (!s.empty()) visit(g, s);

  const std::size_t m = x.faces.size();
  x.le_.assign(m, std::vector<bool>(m, false));
  for (auto& lo : pairs)
    for (auto& hi : pairs) {
      if (!c.cell_leq(lo.cell, hi.cell)) continue;
      if (!subset_of(hi.sed, lo.sed) || !subset_of(lo.sed, c.faces[lo.cell].rays)) continue;
      x.le_[lo.cls][hi.cls] = true;
    }
  x.facets.assign(m, {});
  x.cofacets.assign(m, {});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !x.le_[a][b]) continue;
      if (x.faces[a].dim >= x.faces[b].dim) throw Error("internal", "face order not graded");
      if (x.faces[a].dim + 1 == x.faces[b].dim) {
        x.facets[b].push_back(a);
        x.cofacets[a].push_back(b);
      }
    }
  return x;
}

IVec inward_vector(const FaceComplex& x, std::size_t gamma, std::size_t delta) {
  const Face &g = x.faces[gamma], &d = x.faces[delta];
  if (!x.leq(gamma, delta) || g.dim + 1 != d.dim)
    throw Error("not-codim-1", "faces are not a codimension one pair");
  if (g.sed == d.sed) {
    for (auto& p : d.points)
      if (!std::binary_search(g.points.begin(), g.points.end(), p)) return sub(p, g.points[0]);
    for (auto& u : d.dirs)
      if (!std::binary_search(g.dirs.begin(), g.dirs.end(), u)) return u;
    throw Error("internal", "no new generator for a codim one pair");
  }
  Subset extra;
  std::set_difference(g.sed.begin(), g.sed.end(), d.sed.begin(), d.sed.end(), std::back_inserter(extra));
  if (extra.size() != 1) throw Error("internal", "sedentarity jumps by more than one ray");
  IVec u = image(x.stratum(d.sed), x.rays[extra[0]]);
  for (auto& v : u) v = -v;
  return u;
}

int sign(const FaceComplex& x, std::size_t gamma, std::size_t delta) {
  const Face &g = x.faces[gamma], &d = x.faces[delta];
  IVec u = inward_vector(x, gamma, delta);
  std::vector<Vec> td;
  for (auto& t : d.tangent) td.push_back(to_vec(t));
  Matrix TD = Matrix::from_columns(td, d.amb);
  Matrix lift = TD;
  if (g.sed != d.sed) lift = x.stratum_map(d.sed, g.sed) * TD;
  std::vector<Vec> cols;
  for (auto& t : g.tangent) {
    auto c = solve(lift, to_vec(t));
    if (!c) throw Error("internal", "tangent of a face does not lie in its coface");
    cols.push_back(*c);
  }
  auto cu = solve(TD, to_vec(u));
  if (!cu) throw Error("internal", "inward vector outside the coface");
  cols.push_back(*cu);
  Rational det = determinant(Matrix::from_columns(cols, d.dim));
  if (det == 0) throw Error("internal", "degenerate orientation comparison");
  return det > 0 ? 1 : -1;
}

IVec primitive_normal(const FaceComplex& x, std::size_t gamma, std::size_t delta) {
  if (x.faces[gamma].sed != x.faces[delta].sed)
    throw Error("sedentarity-mismatch", "primitive normal needs equal sedentarity");
  return primitive(image(x.faces[gamma].normal_proj, inward_vector(x, gamma, delta)));
}

Vec multivector(const Face& f) {
  std::vector<Vec> t;
  for (auto& v : f.tangent) t.push_back(to_vec(v));
  return wedge(t, f.amb);
}

StarFan star_fan(const FaceComplex& x, std::size_t delta) {
  const Face& d = x.faces[delta];
  StarFan s;
  s.fan.n = d.amb - d.dim;
  for (auto c : x.cofacets[delta]) {
    if (x.faces[c].sed != d.sed) continue;
    s.ray_face.push_back(c);
    s.fan.rays.push_back(primitive_normal(x, delta, c));
  }
  std::vector<std::pair<Subset, std::size_t>> cones;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (!x.leq(delta, e) || x.faces[e].sed != d.sed) continue;
    Subset cone;
    for (std::size_t i = 0; i < s.ray_face.size(); ++i)
      if (x.leq(s.ray_face[i], e)) cone.push_back(i);
    if (cone.size() != x.faces[e].dim - d.dim) throw Error("internal", "star fan cone is not simplicial");
    cones.emplace_back(cone, e);
  }
  std::sort(cones.begin(), cones.end(), [](auto& a, auto& b) { return cone_less(a.first, b.first); });
  for (auto& [cone, e] : cones) {
    s.face_cone[e] = s.fan.cones.size();
    s.fan.cones.push_back(cone);
    s.cone_face.push_back(e);
  }
  return s;
}

}  // namespace trophodge
