#include "trophodge/trop_cohomology.hpp"

#include <algorithm>
#include <functional>

namespace trophodge {

const Matrix& TropicalComplex::coefficient_space(std::size_t delta, std::size_t p) const {
  auto key = std::make_pair(delta, p);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;
  const FaceComplex& x = *x_;
  const Face& d = x.faces[delta];
  const std::size_t m = d.amb;
  std::vector<Vec> gens;
  if (p <= m) {
    for (std::size_t e = 0; e < x.size(); ++e) {
      if (!x.leq(delta, e) || x.faces[e].sed != d.sed) continue;
      const auto& t = x.faces[e].tangent;
      for (const auto& idx : subsets(t.size(), p)) {
        std::vector<Vec> vs;
        for (auto i : idx) vs.push_back(to_vec(t[i]));
        gens.push_back(wedge(vs, m));
      }
    }
  }
  Subspace s = span(binom(m, p), gens);
  s.ambient_dim = binom(m, p);
  return spaces_.emplace(key, s.as_columns()).first->second;
}

const Matrix& TropicalComplex::coefficient_map(std::size_t delta, std::size_t gamma, std::size_t p) const {
  auto key = std::make_tuple(delta, gamma, p);
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  const FaceComplex& x = *x_;
  if (!x.leq(gamma, delta)) throw Error("internal", "coefficient map needs gamma <= delta");
  const Face &d = x.faces[delta], &g = x.faces[gamma];
  const Matrix& fd = coefficient_space(delta, p);
  const Matrix& fg = coefficient_space(gamma, p);
  Matrix img = fd;
  if (d.sed != g.sed) img = exterior_power(x.stratum_map(d.sed, g.sed), p) * fd;
  Matrix out(fg.cols(), fd.cols());
  if (fd.cols() > 0 && fg.cols() > 0) {
    auto c = solve_many(fg, img);
    if (!c) throw Error("internal", "coefficient map leaves the target space");
    out = *c;
  } else if (fd.cols() > 0 && !img.is_zero()) {
    throw Error("internal", "coefficient map into a zero space is nonzero");
  }
  return maps_.emplace(key, std::move(out)).first->second;
}

std::vector<std::size_t> TropicalComplex::cochain_offsets(std::size_t p, std::size_t q) const {
  std::vector<std::size_t> off{0};
  for (auto f : x_->of_dim(q)) off.push_back(off.back() + coefficient_dim(f, p));
  return off;
}

GradedComplex TropicalComplex::cochains(std::size_t p) const {
  const FaceComplex& x = *x_;
  const std::size_t dim = x.dim();
  GradedComplex c;
  for (std::size_t q = 0; q <= dim; ++q) c.set_dim(static_cast<int>(q), cochain_offsets(p, q).back());
  for (std::size_t q = 0; q < dim; ++q) {
    auto lo = x.of_dim(q), hi = x.of_dim(q + 1);
    auto olo = cochain_offsets(p, q), ohi = cochain_offsets(p, q + 1);
    Matrix m(ohi.back(), olo.back());
    for (std::size_t i = 0; i < hi.size(); ++i)
      for (auto g : x.facets[hi[i]]) {
        std::size_t j = static_cast<std::size_t>(std::find(lo.begin(), lo.end(), g) - lo.begin());
        Matrix blk = coefficient_map(hi[i], g, p).transpose();
        if (sign(x, g, hi[i]) < 0) blk = -blk;
        m.set_block(ohi[i], olo[j], blk);
      }
    c.set_d(static_cast<int>(q), m);
  }
  return c;
}

std::vector<std::size_t> TropicalComplex::hodge_numbers(std::size_t p) const {
  GradedComplex c = cochains(p);
  std::vector<std::size_t> h;
  for (std::size_t q = 0; q <= x_->dim(); ++q) h.push_back(c.cohomology_dim(static_cast<int>(q)));
  return h;
}

// ---- order complex ----

OrderComplex::OrderComplex(const TropicalComplex& t) : t_(&t) {
  const FaceComplex& x = t.complex();
  d_ = x.dim();
  chains_.assign(d_ + 1, {});
  index_.assign(d_ + 1, {});
  std::vector<std::size_t> cur;
  std::function<void()> grow = [&]() {
    chains_[cur.size() - 1].push_back(cur);
    for (std::size_t e = 0; e < x.size(); ++e)
      if (e != cur.back() && x.leq(cur.back(), e)) {
        cur.push_back(e);
        grow();
        cur.pop_back();
      }
  };
  for (std::size_t f = 0; f < x.size(); ++f) {
    cur = {f};
    grow();
  }
  for (std::size_t q = 0; q <= d_; ++q) {
    std::sort(chains_[q].begin(), chains_[q].end());
    for (std::size_t i = 0; i < chains_[q].size(); ++i) index_[q][chains_[q][i]] = i;
  }
  // subdivision of the fundamental class: full flags, sign product
  const auto& top = chains_[d_];
  fund_.assign(top.size(), Rational(0));
  for (std::size_t i = 0; i < top.size(); ++i) {
    const auto& c = top[i];
    int s = 1;
    for (std::size_t k = 1; k <= d_; ++k) s *= (k % 2 ? -1 : 1) * sign(x, c[k - 1], c[k]);
    const Face& eta = x.faces[c.back()];
    const Matrix& f = t.coefficient_space(c.back(), d_);
    auto coord = solve(f, multivector(eta));
    if (!coord || coord->size() != 1) throw Error("internal", "top face multivector outside F_d");
    fund_[i] = s * (*coord)[0];
  }
}

std::vector<std::size_t> OrderComplex::offsets(std::size_t p, std::size_t q) const {
  std::vector<std::size_t> off{0};
  for (auto& c : chains_[q]) off.push_back(off.back() + t_->coefficient_dim(c.back(), p));
  return off;
}

GradedComplex OrderComplex::cochains(std::size_t p) const {
  GradedComplex g;
  for (std::size_t q = 0; q <= d_; ++q) g.set_dim(static_cast<int>(q), offsets(p, q).back());
  for (std::size_t q = 0; q < d_; ++q) {
    auto olo = offsets(p, q), ohi = offsets(p, q + 1);
    Matrix m(ohi.back(), olo.back());
    for (std::size_t r = 0; r < chains_[q + 1].size(); ++r) {
      const auto& c = chains_[q + 1][r];
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<std::size_t> face = c;
        face.erase(face.begin() + static_cast<long>(i));
        std::size_t j = index_[q].at(face);
        Matrix blk = (i + 1 == c.size()) ? t_->coefficient_map(c.back(), face.back(), p).transpose()
                                         : Matrix::identity(t_->coefficient_dim(c.back(), p));
        if (i % 2) blk = -blk;
        m.set_block(ohi[r], olo[j], blk);
      }
    }
    g.set_d(static_cast<int>(q), m);
  }
  return g;
}

bool OrderComplex::fundamental_is_cycle() const {
  if (d_ == 0) return true;
  GradedComplex g = cochains(d_);
  // a chain is a cycle iff it kills every coboundary
  Matrix dm = g.d(static_cast<int>(d_ - 1));
  return is_zero(dm.transpose().apply(fund_));
}

Vec OrderComplex::cup(std::size_t p, std::size_t q, const Vec& a, std::size_t p2, std::size_t q2,
                      const Vec& b) const {
  const FaceComplex& x = t_->complex();
  if (q + q2 > d_) return {};
  auto oa = offsets(p, q), ob = offsets(p2, q2), oc = offsets(p + p2, q + q2);
  Vec out(oc.back(), Rational(0));
  const auto& cs = chains_[q + q2];
  for (std::size_t r = 0; r < cs.size(); ++r) {
    const auto& c = cs[r];
    std::vector<std::size_t> front(c.begin(), c.begin() + static_cast<long>(q) + 1);
    std::vector<std::size_t> back(c.begin() + static_cast<long>(q), c.end());
    std::size_t ia = index_[q].at(front), ib = index_[q2].at(back);
    std::size_t mid = c[q], top = c.back();
    const Matrix& fa = t_->coefficient_space(mid, p);
    const Matrix& fb = t_->coefficient_space(top, p2);
    const Matrix& fc = t_->coefficient_space(top, p + p2);
    if (fa.cols() == 0 || fb.cols() == 0 || fc.cols() == 0) continue;
    Vec va(a.begin() + static_cast<long>(oa[ia]), a.begin() + static_cast<long>(oa[ia + 1]));
    Vec vb(b.begin() + static_cast<long>(ob[ib]), b.begin() + static_cast<long>(ob[ib + 1]));
    if (is_zero(va) || is_zero(vb)) continue;
    auto wa = solve(fa.transpose(), va);
    auto wb = solve(fb.transpose(), vb);
    if (!wa || !wb) throw Error("internal", "cannot extend a form");
    Vec pulled = *wa;
    if (x.faces[mid].sed != x.faces[top].sed)
      pulled = exterior_power(x.stratum_map(x.faces[top].sed, x.faces[mid].sed), p).transpose().apply(*wa);
    Vec w = wedge_forms(pulled, p, *wb, p2, x.faces[top].amb);
    Vec val = fc.transpose().apply(w);
    for (std::size_t k = 0; k < val.size(); ++k) out[oc[r] + k] += val[k];
  }
  return out;
}

Rational OrderComplex::evaluate(const Vec& top_cochain) const {
  if (top_cochain.size() != fund_.size()) throw Error("shape", "not a top-degree cochain");
  return dot(top_cochain, fund_);
}

Matrix OrderComplex::to_cellular(std::size_t p, std::size_t q) const {
  // dual of barycentric subdivision: sum over full flags ending at each face
  const FaceComplex& x = t_->complex();
  auto faces = x.of_dim(q);
  auto ocell = t_->cochain_offsets(p, q);
  auto oord = offsets(p, q);
  Matrix m(ocell.back(), oord.back());
  for (std::size_t r = 0; r < chains_[q].size(); ++r) {
    const auto& c = chains_[q][r];
    if (x.faces[c.back()].dim != q) continue;
    bool full = true;
    for (std::size_t k = 0; k <= q; ++k)
      if (x.faces[c[k]].dim != k) full = false;
    if (!full) continue;
    int s = 1;
    for (std::size_t k = 1; k <= q; ++k) s *= (k % 2 ? -1 : 1) * sign(x, c[k - 1], c[k]);
    std::size_t j = static_cast<std::size_t>(std::find(faces.begin(), faces.end(), c.back()) - faces.begin());
    std::size_t n = t_->coefficient_dim(c.back(), p);
    for (std::size_t k = 0; k < n; ++k) m.set(ocell[j] + k, oord[r] + k, s);
  }
  return m;
}

Matrix poincare_pairing(const OrderComplex& o, std::size_t p, std::size_t q) {
  const std::size_t d = o.dim();
  if (p > d || q > d) throw Error("degree-mismatch", "bidegree out of range");
  Cohomology a(o.cochains(p), static_cast<int>(q));
  Cohomology b(o.cochains(d - p), static_cast<int>(d - q));
  Matrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      m.set(i, j, o.evaluate(o.cup(p, q, a.reps()[i], d - p, d - q, b.reps()[j])));
  return m;
}

}  // namespace trophodge
