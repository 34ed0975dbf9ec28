#include "trophodge/steenbrink.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "trophodge/error.hpp"

namespace trophodge {

namespace {

// purity and connectedness through codimension one
bool looks_bergman(const Fan& f, std::size_t d) {
  std::vector<std::size_t> tops;
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    bool maximal = true;
    for (std::size_t e = 0; e < f.cones.size() && maximal; ++e)
      if (e != c && f.cones[e].size() > f.cones[c].size() &&
          std::includes(f.cones[e].begin(), f.cones[e].end(), f.cones[c].begin(), f.cones[c].end()))
        maximal = false;
    if (!maximal) continue;
    if (f.cones[c].size() != d) return false;
    tops.push_back(c);
  }
  if (d <= 1 || tops.size() <= 1) return true;
  std::vector<bool> seen(tops.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    const Subset& ci = f.cones[tops[i]];
    for (std::size_t j = 0; j < tops.size(); ++j) {
      if (seen[j]) continue;
      Subset common;
      const Subset& cj = f.cones[tops[j]];
      std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(common));
      if (common.size() + 1 == d) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Matrix gram(const ChowRing& r, std::size_t k) {
  const std::size_t top = r.top();
  Matrix g(r.dim(k), r.dim(top - k));
  for (std::size_t i = 0; i < r.dim(k); ++i) {
    Vec ei(r.dim(k), Rational(0));
    ei[i] = 1;
    for (std::size_t j = 0; j < r.dim(top - k); ++j) {
      Vec ej(r.dim(top - k), Rational(0));
      ej[j] = 1;
      g.set(i, j, r.pairing(k, ei, ej));
    }
  }
  return g;
}

void add_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b, int sgn) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& [j, v] : b.row_entries(i)) m.add(r0 + i, c0 + j, sgn < 0 ? Rational(-v) : v);
}

}  // namespace

SteenbrinkPage::SteenbrinkPage(const FaceComplex& x) : x_(&x), local_(x), d_(x.dim()) {
  finite_ = x.finite_faces();
  std::vector<std::vector<std::size_t>> by_dim(d_ + 1);
  for (auto f : finite_) {
    const auto& fan = local_.star(f).fan;
    if (!looks_bergman(fan, d_ - x.faces[f].dim))
      throw Error("star-fan-not-Bergman", "star fan of face " + x.labels[f] + " is not pure and connected");
    face_pos_[f] = by_dim[x.faces[f].dim].size();
    by_dim[x.faces[f].dim].push_back(f);
  }
  const int d = static_cast<int>(d_);
  for (int a = -d; a <= d; ++a)
    for (int b = 0; b <= 2 * d; b += 2)
      for (int s = std::abs(a); s <= d; s += 2) {
        int k2 = a + b - s;
        if (k2 < 0 || k2 % 2 || k2 / 2 > d - s || by_dim[s].empty()) continue;
        StBlock blk{a, b, s, static_cast<std::size_t>(k2 / 2), by_dim[s], {}, 0};
        for (auto f : blk.faces) {
          blk.offsets.push_back(blk.dim);
          blk.dim += local_.ring(f).dim(blk.k);
        }
        blocks_[{a, b, s}] = std::move(blk);
      }
}

const StBlock& SteenbrinkPage::block(int a, int b, int s) const {
  auto it = blocks_.find({a, b, s});
  if (it == blocks_.end()) throw Error("no-block", "no Steenbrink block at this tridegree");
  return it->second;
}

std::vector<const StBlock*> SteenbrinkPage::blocks() const {
  std::vector<const StBlock*> out;
  for (auto& [key, blk] : blocks_) out.push_back(&blk);
  return out;
}

std::vector<const StBlock*> SteenbrinkPage::row_blocks(int a, int b) const {
  std::vector<const StBlock*> out;
  for (int s = std::abs(a); s <= static_cast<int>(d_); s += 2)
    if (has_block(a, b, s)) out.push_back(&block(a, b, s));
  return out;
}

std::size_t SteenbrinkPage::dim(int a, int b) const {
  std::size_t n = 0;
  for (auto* blk : row_blocks(a, b)) n += blk->dim;
  return n;
}

std::size_t SteenbrinkPage::offset(int a, int b, int s) const {
  std::size_t n = 0;
  for (auto* blk : row_blocks(a, b)) {
    if (blk->s == s) return n;
    n += blk->dim;
  }
  throw Error("no-block", "no Steenbrink block at this tridegree");
}

Matrix SteenbrinkPage::istar(int a, int b) const {
  Matrix m(dim(a + 1, b), dim(a, b));
  for (auto* src : row_blocks(a, b)) {
    if (!has_block(a + 1, b, src->s + 1)) continue;
    const StBlock& dst = block(a + 1, b, src->s + 1);
    std::size_t r0 = offset(a + 1, b, dst.s), c0 = offset(a, b, src->s);
    for (std::size_t i = 0; i < src->faces.size(); ++i) {
      auto delta = src->faces[i];
      for (auto gamma : x_->cofacets[delta]) {
        auto pos = face_pos_.find(gamma);
        if (pos == face_pos_.end()) continue;
        add_block(m, r0 + dst.offsets[pos->second], c0 + src->offsets[i],
                  local_.restriction(delta, gamma, src->k), sign(*x_, delta, gamma));
      }
    }
  }
  return m;
}

Matrix SteenbrinkPage::gysin(int a, int b) const {
  Matrix m(dim(a + 1, b), dim(a, b));
  for (auto* src : row_blocks(a, b)) {
    if (src->s == 0 || !has_block(a + 1, b, src->s - 1)) continue;
    const StBlock& dst = block(a + 1, b, src->s - 1);
    std::size_t r0 = offset(a + 1, b, dst.s), c0 = offset(a, b, src->s);
    for (std::size_t i = 0; i < src->faces.size(); ++i) {
      auto delta = src->faces[i];
      for (auto gamma : x_->facets[delta]) {
        auto pos = face_pos_.find(gamma);
        if (pos == face_pos_.end()) continue;
        add_block(m, r0 + dst.offsets[pos->second], c0 + src->offsets[i],
                  local_.gysin(gamma, delta, src->k), sign(*x_, gamma, delta));
      }
    }
  }
  return m;
}

Matrix SteenbrinkPage::monodromy(int a, int b) const {
  Matrix m(dim(a + 2, b - 2), dim(a, b));
  for (auto* src : row_blocks(a, b)) {
    if (src->s < std::abs(a + 2) || !has_block(a + 2, b - 2, src->s)) continue;
    std::size_t r0 = offset(a + 2, b - 2, src->s), c0 = offset(a, b, src->s);
    for (std::size_t i = 0; i < src->dim; ++i) m.set(r0 + i, c0 + i, Rational(1));
  }
  return m;
}

Matrix SteenbrinkPage::monodromy_power(int a, int b, int k) const {
  Matrix m = Matrix::identity(dim(a, b));
  for (int i = 0; i < k; ++i) m = monodromy(a + 2 * i, b - 2 * i) * m;
  return m;
}

GradedComplex SteenbrinkPage::row(int b) const {
  GradedComplex g;
  const int d = static_cast<int>(d_);
  for (int a = -d; a <= d; ++a) g.set_dim(a, dim(a, b));
  if (b % 2 == 0)
    for (int a = -d; a < d; ++a) g.set_d(a, this->d(a, b));
  return g;
}

std::map<int, std::size_t> SteenbrinkPage::row_cohomology(int b) const {
  std::map<int, std::size_t> out;
  GradedComplex g = row(b);
  const int d = static_cast<int>(d_);
  for (int a = -d; a <= d; ++a) out[a] = g.cohomology_dim(a);
  return out;
}

int SteenbrinkPage::epsilon(int a, int b) {
  if (b % 2) return 1;
  return (a + b / 2) % 2 == 0 ? 1 : -1;
}

Matrix SteenbrinkPage::psi_matrix(int a, int b) const {
  const int b2 = 2 * static_cast<int>(d_) - b;
  Matrix m(dim(a, b), dim(-a, b2));
  const int eps = epsilon(a, b);
  for (auto* src : row_blocks(a, b)) {
    if (!has_block(-a, b2, src->s)) continue;
    const StBlock& dst = block(-a, b2, src->s);
    std::size_t r0 = offset(a, b, src->s), c0 = offset(-a, b2, src->s);
    for (std::size_t i = 0; i < src->faces.size(); ++i)
      add_block(m, r0 + src->offsets[i], c0 + dst.offsets[i], gram(local_.ring(src->faces[i]), src->k), eps);
  }
  return m;
}

Rational SteenbrinkPage::psi(const StElement& x, const StElement& y) const {
  if (x.a + y.a != 0 || x.b + y.b != 2 * static_cast<int>(d_)) return Rational(0);
  return dot(x.v, psi_matrix(x.a, x.b).apply(y.v));
}

Matrix SteenbrinkPage::kernel_inclusion(int a, int b) const {
  std::size_t n = has_block(a, b, a) ? block(a, b, a).dim : 0;
  Matrix m(dim(a, b), n);
  if (n) {
    std::size_t r0 = offset(a, b, a);
    for (std::size_t i = 0; i < n; ++i) m.set(r0 + i, i, Rational(1));
  }
  return m;
}

Matrix SteenbrinkPage::cokernel_projection(int a, int b) const {
  std::size_t n = has_block(a, b, -a) ? block(a, b, -a).dim : 0;
  Matrix m(n, dim(a, b));
  if (n) {
    std::size_t c0 = offset(a, b, -a);
    for (std::size_t i = 0; i < n; ++i) m.set(i, c0 + i, Rational(1));
  }
  return m;
}

GradedComplex SteenbrinkPage::kernel_complex(int b) const {
  GradedComplex g;
  const int d = static_cast<int>(d_);
  for (int a = 0; a <= d; ++a) g.set_dim(a, kernel_inclusion(a, b).cols());
  for (int a = 0; a < d; ++a)
    g.set_d(a, kernel_inclusion(a + 1, b).transpose() * this->d(a, b) * kernel_inclusion(a, b));
  return g;
}

GradedComplex SteenbrinkPage::cokernel_complex(int b) const {
  GradedComplex g;
  const int d = static_cast<int>(d_);
  for (int a = -d; a <= 0; ++a) g.set_dim(a, cokernel_projection(a, b).rows());
  for (int a = -d; a < 0; ++a)
    g.set_d(a, cokernel_projection(a + 1, b) * this->d(a, b) * cokernel_projection(a, b).transpose());
  return g;
}

std::pair<std::size_t, std::size_t> surviving_relative(const SteenbrinkPage& st, int p, int q) {
  return {st.kernel_complex(2 * p).cohomology_dim(q - p), st.cokernel_complex(2 * p).cohomology_dim(q - p)};
}

Matrix cohomology_monodromy(const SteenbrinkPage& st, int a, int b, int k) {
  Cohomology src(st.row(b), a), dst(st.row(b - 2 * k), a + 2 * k);
  return induced_map(src, dst, st.monodromy_power(a, b, k));
}

Matrix cohomology_pairing(const SteenbrinkPage& st, int a, int b) {
  const int b2 = 2 * static_cast<int>(st.dim()) - b + 2 * a;
  Cohomology h1(st.row(b), -a), h2(st.row(b2), -a);
  return h1.reps_matrix().transpose() * st.psi_matrix(-a, b) * st.monodromy_power(-a, b2, a) *
         h2.reps_matrix();
}

bool HlReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const HlEntry& e) { return e.page && e.cohomology; });
}

HlReport verify_hl(const SteenbrinkPage& st) {
  HlReport r;
  const int d = static_cast<int>(st.dim());
  for (int k = 0; k <= d; ++k)
    for (int b = 2 * k; b <= 2 * d; b += 2) {
      HlEntry e{k, b, false, false};
      Matrix m = st.monodromy_power(-k, b, k);
      e.page = m.rows() == m.cols() && rank(m) == m.rows();
      Matrix h = cohomology_monodromy(st, -k, b, k);
      e.cohomology = h.rows() == h.cols() && rank(h) == h.rows();
      r.entries.push_back(e);
    }
  return r;
}

PrimitiveParts primitive_parts(const SteenbrinkPage& st) {
  if (!verify_hl(st).ok()) throw Error("hl-failure", "monodromy does not satisfy hard Lefschetz");
  PrimitiveParts out;
  const int d = static_cast<int>(st.dim());
  // basis of P^{-a,b} in cohomology coordinates
  std::map<std::pair<int, int>, Matrix> prim;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= 2 * d; b += 2) {
      std::size_t h = Cohomology(st.row(b), -a).dim();
      Matrix nk = cohomology_monodromy(st, -a, b, a + 1);
      Subspace ker = kernel_basis(nk);
      prim[{a, b}] = Matrix::from_columns(ker.basis, h);
      out.dims[{a, b}] = ker.dim();
    }
  // N^s P^{-a-2s,b+2s} inside H^{-a}(b)
  auto pieces = [&](int a, int b) {
    std::vector<Matrix> ps;
    for (int s = 0; a + 2 * s <= d; ++s) {
      auto it = prim.find({a + 2 * s, b + 2 * s});
      if (it == prim.end()) break;
      ps.push_back(cohomology_monodromy(st, -a - 2 * s, b + 2 * s, s) * it->second);
    }
    return ps;
  };
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= 2 * d; b += 2) {
      std::size_t h = Cohomology(st.row(b), -a).dim();
      auto ps = pieces(a, b);
      Matrix all(h, 0);
      for (auto& p : ps) all = Matrix::hstack(all, p);
      if (all.cols() != h || rank(all) != h) out.decomposition = false;

      const int b2 = 2 * d - b + 2 * a;
      if (b2 < 0 || b2 > 2 * d) continue;
      Matrix g = cohomology_pairing(st, a, b);
      auto qs = pieces(a, b2);
      for (std::size_t s = 0; s < ps.size(); ++s)
        for (std::size_t t = 0; t < qs.size(); ++t)
          if (s != t && !(ps[s].transpose() * g * qs[t]).is_zero()) out.orthogonal = false;
    }
  return out;
}

}  // namespace trophodge
