#include "trophodge/chow.hpp"

#include <algorithm>

namespace trophodge {

namespace {

Subset support(const Monomial& m) {
  Subset s(m.begin(), m.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// compositions of p into k positive parts
void compositions(std::size_t p, std::size_t k, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    if (p == 0) out.push_back(cur);
    return;
  }
  for (std::size_t a = 1; a + (k - 1) <= p; ++a) {
    cur.push_back(a);
    compositions(p - a, k - 1, cur, out);
    cur.pop_back();
  }
}

std::size_t cone_position(const Fan& f, std::size_t cone) {
  auto same = f.cones_of_dim(f.cones[cone].size());
  return static_cast<std::size_t>(std::find(same.begin(), same.end(), cone) - same.begin());
}

}  // namespace

ChowRing::ChowRing(Fan f) : fan_(std::move(f)) {
  if (!fan_.unimodular()) throw Error("not-unimodular", "Chow ring needs a unimodular fan");
  d_ = fan_.dim();
  const std::size_t n = fan_.n;
  monos_.resize(d_ + 1);
  index_.resize(d_ + 1);
  basis_.resize(d_ + 1);
  nf_.resize(d_ + 1);
  for (std::size_t p = 0; p <= d_; ++p) {
    for (auto& cone : fan_.cones) {
      if (cone.size() > p || (cone.empty() && p > 0)) continue;
      std::vector<std::vector<std::size_t>> comps;
      std::vector<std::size_t> cur;
      compositions(p, cone.size(), cur, comps);
      for (auto& c : comps) {
        Monomial m;
        for (std::size_t i = 0; i < c.size(); ++i) m.insert(m.end(), c[i], cone[i]);
        monos_[p].push_back(m);
      }
    }
    std::sort(monos_[p].begin(), monos_[p].end());
    for (std::size_t i = 0; i < monos_[p].size(); ++i) index_[p][monos_[p][i]] = i;

    const std::size_t V = monos_[p].size();
    std::vector<Vec> rel;
    if (p > 0) {
      for (auto& b : monos_[p - 1])
        for (std::size_t i = 0; i < n; ++i) {
          Vec v(V, Rational(0));
          bool any = false;
          for (std::size_t r = 0; r < fan_.rays.size(); ++r) {
            if (fan_.rays[r][i] == 0) continue;
            Monomial m = b;
            m.insert(std::upper_bound(m.begin(), m.end(), r), r);
            auto it = index_[p].find(m);
            if (it == index_[p].end()) continue;
            v[it->second] += Rational(fan_.rays[r][i]);
            any = true;
          }
          if (any && !is_zero(v)) rel.push_back(std::move(v));
        }
    }
    std::vector<std::size_t> sqf;
    for (std::size_t c = 0; c < fan_.cones.size(); ++c)
      if (fan_.cones[c].size() == p) sqf.push_back(c);
    std::vector<Vec> cols = rel;
    for (auto c : sqf) {
      Vec e(V, Rational(0));
      e[index_[p].at(fan_.cones[c])] = 1;
      cols.push_back(e);
    }
    auto piv = independent_columns(Matrix::from_columns(cols, V));
    if (piv.size() != V) throw Error("not-unimodular", "squarefree monomials do not span the Chow group");
    std::vector<Vec> square;
    std::size_t nrel = 0;
    for (auto j : piv) {
      square.push_back(cols[j]);
      if (j < rel.size())
        ++nrel;
      else
        basis_[p].push_back(sqf[j - rel.size()]);
    }
    auto inv = solve_many(Matrix::from_columns(square, V), Matrix::identity(V));
    if (!inv) throw Error("internal", "Chow normal form matrix is singular");
    nf_[p] = inv->block(nrel, 0, V - nrel, V);
  }
  if (basis_[d_].size() == 1) {
    degree_ok_ = true;
    for (std::size_t c = 0; c < fan_.cones.size(); ++c) {
      if (fan_.cones[c].size() != d_) continue;
      Vec v = cone_class(c);
      if (v.size() != 1 || v[0] != 1) degree_ok_ = false;
    }
  }
}

std::vector<std::size_t> ChowRing::dims() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p <= d_; ++p) out.push_back(dim(p));
  return out;
}

std::string ChowRing::label(std::size_t p, std::size_t i) const {
  const Subset& c = fan_.cones[basis_.at(p).at(i)];
  if (c.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += "*";
    s += std::to_string(c[k]);
  }
  return s;
}

Vec ChowRing::normal_form(const Monomial& m) const {
  const std::size_t p = m.size();
  if (p > d_) return {};
  if (!fan_.find(support(m))) return Vec(dim(p), Rational(0));
  return nf_[p].column(index_[p].at(m));
}

Vec ChowRing::cone_class(std::size_t cone) const { return normal_form(fan_.cones.at(cone)); }

Vec ChowRing::product(std::size_t p, const Vec& a, std::size_t q, const Vec& b) const {
  if (p + q > d_) return {};
  Vec out(dim(p + q), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      Monomial m;
      const Subset &x = fan_.cones[basis_[p][i]], &y = fan_.cones[basis_[q][j]];
      std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(m));
      Vec v = normal_form(m);
      Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < v.size(); ++k) out[k] += c * v[k];
    }
  }
  return out;
}

Rational ChowRing::degree(const Vec& c) const {
  if (!degree_ok_) throw Error("not-bergman", "fan has no degree map");
  if (c.size() != dim(d_)) throw Error("degree-mismatch", "class is not of top degree");
  return c[0];
}

Rational ChowRing::pairing(std::size_t p, const Vec& a, const Vec& b) const {
  if (p > d_ || a.size() != dim(p) || b.size() != dim(d_ - p))
    throw Error("degree-mismatch", "pairing needs complementary degrees");
  return degree(product(p, a, d_ - p, b));
}

Matrix restriction_matrix(const ChowRing& src, const ChowRing& dst, std::size_t rho,
                          const std::vector<std::optional<std::size_t>>& ray_map, std::size_t k,
                          const Vec& m) {
  const Fan& fs = src.fan();
  const std::size_t d1 = dst.dim(1);
  std::vector<Vec> img(fs.rays.size(), Vec(d1, Rational(0)));
  for (std::size_t r = 0; r < fs.rays.size(); ++r) {
    if (r == rho || !ray_map[r] || d1 == 0) continue;
    auto c = dst.fan().find(Subset{*ray_map[r]});
    if (!c) throw Error("internal", "ray missing from star fan");
    img[r] = dst.cone_class(*c);
  }
  for (std::size_t r = 0; r < fs.rays.size(); ++r) {
    if (r == rho) continue;
    Rational c = dot(m, to_vec(fs.rays[r]));
    for (std::size_t i = 0; i < d1; ++i) img[rho][i] -= c * img[r][i];
  }
  Matrix out(dst.dim(k), src.dim(k));
  for (std::size_t j = 0; j < src.dim(k); ++j) {
    Vec acc = dst.unit();
    std::size_t deg = 0;
    for (auto r : fs.cones[src.basis(k)[j]]) {
      acc = dst.product(deg, acc, 1, img[r]);
      ++deg;
      if (acc.empty()) break;
    }
    for (std::size_t i = 0; i < acc.size(); ++i) out.set(i, j, acc[i]);
  }
  return out;
}

Matrix restriction_matrix(const ChowRing& src, const ChowRing& dst, std::size_t rho,
                          const std::vector<std::optional<std::size_t>>& ray_map, std::size_t k) {
  const std::size_t n = src.fan().n;
  Matrix e(1, n);
  for (std::size_t i = 0; i < n; ++i) e.set(0, i, Rational(src.fan().rays[rho][i]));
  auto m = solve(e, Vec{Rational(1)});
  if (!m) throw Error("internal", "ray is zero");
  Matrix a = restriction_matrix(src, dst, rho, ray_map, k, *m);
  auto perp = kernel_basis(e);
  if (!perp.basis.empty()) {
    Vec m2 = *m;
    for (auto& v : perp.basis) m2 = add(m2, v);
    if (!(restriction_matrix(src, dst, rho, ray_map, k, m2) == a))
      throw Error("restriction-ambiguous", "restriction depends on the choice of m");
  }
  return a;
}

Matrix gysin_matrix(const ChowRing& src, const ChowRing& dst, const std::vector<std::size_t>& cone_map,
                    std::size_t k) {
  Matrix out(dst.dim(k + 1), src.dim(k));
  for (std::size_t j = 0; j < src.dim(k); ++j) {
    Vec v = dst.cone_class(cone_map.at(src.basis(k)[j]));
    for (std::size_t i = 0; i < v.size(); ++i) out.set(i, j, v[i]);
  }
  return out;
}

// ---- Minkowski weights ----

namespace {

struct Incidence {
  std::size_t low, top;
  IVec e;
};

Matrix balancing_matrix(std::size_t ntop, const std::vector<std::size_t>& low_dims,
                        const std::vector<Incidence>& inc) {
  std::vector<std::size_t> off(low_dims.size() + 1, 0);
  for (std::size_t i = 0; i < low_dims.size(); ++i) off[i + 1] = off[i] + low_dims[i];
  Matrix b(off.back(), ntop);
  for (auto& in : inc)
    for (std::size_t r = 0; r < in.e.size(); ++r) b.add(off[in.low] + r, in.top, Rational(in.e[r]));
  return b;
}

Matrix fan_balancing(const Fan& f, std::size_t k) {
  auto tops = f.cones_of_dim(k);
  if (k == 0) return Matrix(0, tops.size());
  auto lows = f.cones_of_dim(k - 1);
  std::vector<std::size_t> dims;
  std::vector<Incidence> inc;
  for (std::size_t i = 0; i < lows.size(); ++i) {
    const Subset& t = f.cones[lows[i]];
    std::vector<IVec> g;
    for (auto r : t) g.push_back(f.rays[r]);
    auto p = complement_projection(g, f.n);
    dims.push_back(p.size());
    for (std::size_t j = 0; j < tops.size(); ++j) {
      const Subset& s = f.cones[tops[j]];
      if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) continue;
      Subset extra;
      std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(extra));
      inc.push_back({i, j, primitive(image(p, f.rays[extra[0]]))});
    }
  }
  return balancing_matrix(tops.size(), dims, inc);
}

Matrix complex_balancing(const FaceComplex& x, std::size_t k) {
  auto tops = open_k_faces(x, k);
  if (k == 0) return Matrix(0, tops.size());
  auto lows = open_k_faces(x, k - 1);
  std::vector<std::size_t> dims;
  std::vector<Incidence> inc;
  for (std::size_t i = 0; i < lows.size(); ++i) {
    const Face& g = x.faces[lows[i]];
    dims.push_back(g.normal_proj.size());
    for (std::size_t j = 0; j < tops.size(); ++j)
      if (x.leq(lows[i], tops[j])) inc.push_back({i, j, primitive_normal(x, lows[i], tops[j])});
  }
  return balancing_matrix(tops.size(), dims, inc);
}

}  // namespace

Subspace minkowski_weights(const Fan& f, std::size_t k) { return kernel_basis(fan_balancing(f, k)); }

std::vector<std::size_t> open_k_faces(const FaceComplex& x, std::size_t k) {
  std::vector<std::size_t> out;
  for (auto f : x.open_faces())
    if (x.faces[f].dim == k) out.push_back(f);
  return out;
}

Subspace minkowski_weights(const FaceComplex& x, std::size_t k) {
  return kernel_basis(complex_balancing(x, k));
}

bool is_balanced(const Fan& f, std::size_t k, const Vec& w) { return is_zero(fan_balancing(f, k).apply(w)); }

bool is_balanced(const FaceComplex& x, std::size_t k, const Vec& w) {
  return is_zero(complex_balancing(x, k).apply(w));
}

Rational evaluate(const ChowRing& r, std::size_t p, const Vec& a, const Vec& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * w.at(cone_position(r.fan(), r.basis(p)[i]));
  return s;
}

ChowMwDuality chow_mw_duality(const ChowRing& r, std::size_t p) {
  ChowMwDuality out;
  const std::size_t d = r.top();
  auto mw = minkowski_weights(r.fan(), p);
  out.evaluation = Matrix(r.dim(p), mw.dim());
  for (std::size_t i = 0; i < r.dim(p); ++i) {
    Vec e(r.dim(p), Rational(0));
    e[i] = 1;
    for (std::size_t j = 0; j < mw.dim(); ++j) out.evaluation.set(i, j, evaluate(r, p, e, mw.basis[j]));
  }
  out.evaluation_invertible =
      out.evaluation.rows() == out.evaluation.cols() && rank(out.evaluation) == out.evaluation.rows();

  auto co = minkowski_weights(r.fan(), d - p);
  auto tops = r.fan().cones_of_dim(d - p);
  Matrix basis = co.as_columns();
  out.poincare = Matrix(co.dim(), r.dim(p));
  for (std::size_t i = 0; i < r.dim(p); ++i) {
    Vec e(r.dim(p), Rational(0));
    e[i] = 1;
    Vec w(tops.size());
    for (std::size_t t = 0; t < tops.size(); ++t)
      w[t] = r.degree(r.product(p, e, d - p, r.cone_class(tops[t])));
    auto c = co.dim() ? solve(basis, w) : (is_zero(w) ? std::optional<Vec>(Vec{}) : std::nullopt);
    if (!c) throw Error("rank-deficient", "degree functional is not a Minkowski weight");
    for (std::size_t j = 0; j < c->size(); ++j) out.poincare.set(j, i, (*c)[j]);
  }
  out.poincare_invertible =
      out.poincare.rows() == out.poincare.cols() && rank(out.poincare) == out.poincare.rows();
  return out;
}

// ---- local rings on a compactified complex ----

const LocalChow::Entry& LocalChow::entry(std::size_t f) const {
  auto it = cache_.find(f);
  if (it != cache_.end()) return it->second;
  Entry e;
  e.star = star_fan(*x_, f);
  e.ring = std::make_unique<ChowRing>(e.star.fan);
  return cache_.emplace(f, std::move(e)).first->second;
}

const StarFan& LocalChow::star(std::size_t f) const { return entry(f).star; }
const ChowRing& LocalChow::ring(std::size_t f) const { return *entry(f).ring; }

const Matrix& LocalChow::restriction(std::size_t gamma, std::size_t delta, std::size_t k) const {
  auto key = std::make_tuple(gamma, delta, k);
  auto it = res_.find(key);
  if (it != res_.end()) return it->second;
  const FaceComplex& x = *x_;
  if (!x.leq(gamma, delta) || x.faces[gamma].dim + 1 != x.faces[delta].dim ||
      x.faces[gamma].sed != x.faces[delta].sed)
    throw Error("not-codim-1", "restriction needs a codim one pair of equal sedentarity");
  const StarFan& sg = star(gamma);
  const StarFan& sd = star(delta);
  std::size_t rho = static_cast<std::size_t>(
      std::find(sg.ray_face.begin(), sg.ray_face.end(), delta) - sg.ray_face.begin());
  std::vector<std::optional<std::size_t>> ray_map(sg.ray_face.size());
  for (std::size_t r = 0; r < sg.ray_face.size(); ++r) {
    if (r == rho) continue;
    for (std::size_t q = 0; q < sd.ray_face.size(); ++q)
      if (x.leq(sg.ray_face[r], sd.ray_face[q])) ray_map[r] = q;
  }
  Matrix m = restriction_matrix(ring(gamma), ring(delta), rho, ray_map, k);
  return res_.emplace(key, std::move(m)).first->second;
}

const Matrix& LocalChow::gysin(std::size_t gamma, std::size_t delta, std::size_t k) const {
  auto key = std::make_tuple(gamma, delta, k);
  auto it = gys_.find(key);
  if (it != gys_.end()) return it->second;
  const FaceComplex& x = *x_;
  if (!x.leq(gamma, delta) || x.faces[gamma].dim + 1 != x.faces[delta].dim ||
      x.faces[gamma].sed != x.faces[delta].sed)
    throw Error("not-codim-1", "Gysin needs a codim one pair of equal sedentarity");
  const StarFan& sg = star(gamma);
  const StarFan& sd = star(delta);
  std::vector<std::size_t> cone_map(sd.cone_face.size());
  for (std::size_t c = 0; c < sd.cone_face.size(); ++c) cone_map[c] = sg.face_cone.at(sd.cone_face[c]);
  Matrix m = gysin_matrix(ring(delta), ring(gamma), cone_map, k);
  return gys_.emplace(key, std::move(m)).first->second;
}

std::string LocalChow::monomial_label(std::size_t f, std::size_t p, std::size_t i) const {
  const StarFan& s = star(f);
  const Subset& c = s.fan.cones[ring(f).basis(p).at(i)];
  if (c.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += "*";
    out += x_->labels[s.ray_face[c[k]]];
  }
  return out;
}

}  // namespace trophodge
