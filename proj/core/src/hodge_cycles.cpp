#include "trophodge/hodge_cycles.hpp"

#include <algorithm>

#include "trophodge/error.hpp"

namespace trophodge {

namespace {

std::size_t position(const std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw Error("internal", "face not found");
  return static_cast<std::size_t>(it - v.begin());
}

// coordinates of n_eta in the basis of F_p(eta)
Vec canonical_coords(const TropicalComplex& t, std::size_t eta, std::size_t p) {
  const Face& f = t.complex().faces[eta];
  auto u = solve(t.coefficient_space(eta, p), multivector(f));
  if (!u) throw Error("internal", "canonical multivector outside F_p");
  return *u;
}

// same-sedentarity cofacets
std::vector<std::size_t> same_sed_cofacets(const FaceComplex& x, std::size_t g) {
  std::vector<std::size_t> out;
  for (auto d : x.cofacets[g])
    if (x.faces[d].sed == x.faces[g].sed) out.push_back(d);
  return out;
}

// particular solution of m y = b; alternate solves with the columns reversed
std::optional<Vec> solve_choice(const Matrix& m, const Vec& b, bool alternate) {
  if (!alternate) return solve(m, b);
  std::vector<std::size_t> rev(m.cols());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = m.cols() - 1 - i;
  auto y = solve(m.select_columns(rev), b);
  if (!y) return y;
  Vec out(m.cols());
  for (std::size_t i = 0; i < rev.size(); ++i) out[rev[i]] = (*y)[i];
  return out;
}

}  // namespace

Vec to_kernel_vector(const SteenbrinkPage& st, const HodgeClass& a) {
  if (!st.has_block(0, 2 * a.p, 0)) return {};
  const StBlock& blk = st.block(0, 2 * a.p, 0);
  Vec v(blk.dim, Rational(0));
  for (auto& [f, alpha] : a.vertices) {
    std::size_t i = position(blk.faces, f);
    std::size_t n = st.local().ring(f).dim(blk.k);
    if (alpha.size() != n) throw Error("schema", "class has the wrong size at a vertex");
    for (std::size_t j = 0; j < n; ++j) v[blk.offsets[i] + j] = alpha[j];
  }
  return v;
}

HodgeClass from_kernel_vector(const SteenbrinkPage& st, int p, const Vec& v) {
  HodgeClass a{p, {}};
  if (!st.has_block(0, 2 * p, 0)) return a;
  const StBlock& blk = st.block(0, 2 * p, 0);
  for (std::size_t i = 0; i < blk.faces.size(); ++i) {
    std::size_t n = st.local().ring(blk.faces[i]).dim(blk.k);
    a.vertices[blk.faces[i]] = Vec(v.begin() + static_cast<long>(blk.offsets[i]),
                                   v.begin() + static_cast<long>(blk.offsets[i] + n));
  }
  return a;
}

HodgeClass zero_class(const SteenbrinkPage& st, int p) {
  std::size_t n = st.has_block(0, 2 * p, 0) ? st.block(0, 2 * p, 0).dim : 0;
  return from_kernel_vector(st, p, Vec(n, Rational(0)));
}

bool is_compatible(const SteenbrinkPage& st, const HodgeClass& a) {
  Vec v = to_kernel_vector(st, a);
  if (v.empty()) return true;
  GradedComplex k = st.kernel_complex(2 * a.p);
  return is_zero(k.d(0).apply(v));
}

std::vector<HodgeClass> hodge_locus_basis(const SteenbrinkPage& st, int p) {
  const int d = static_cast<int>(st.dim());
  if (p < 0 || p > d) return {};
  if (!verify_hl(st).ok()) throw Error("hl-failure", "monodromy does not satisfy hard Lefschetz");
  GradedComplex k = st.kernel_complex(2 * p);
  Subspace z = kernel_basis(k.d(0));
  Cohomology h(st.row(2 * p), 0);
  Matrix j = st.kernel_inclusion(0, 2 * p);
  std::vector<Vec> images;
  for (auto& c : z.basis) images.push_back(h.coords(j.apply(c)));
  Matrix im = Matrix::from_columns(images, h.dim());
  auto pick = independent_columns(im);

  // ker N on cohomology must be exactly the image of H_s^{p,p}
  Matrix n1 = cohomology_monodromy(st, 0, 2 * p, 1);
  if (pick.size() != kernel_basis(n1).dim() || !(n1 * im).is_zero())
    throw Error("internal", "surviving classes do not span ker N");

  // normalize so the cycle weights are in reduced echelon form
  std::vector<Vec> chosen, weights;
  for (auto i : pick) {
    chosen.push_back(z.basis[i]);
    weights.push_back(hodge_to_cycle(st, from_kernel_vector(st, p, z.basis[i])).weights);
  }
  const std::size_t n = chosen.size();
  std::vector<HodgeClass> out;
  if (n == 0) return out;
  const std::size_t m = weights[0].size();
  Matrix aug = Matrix::hstack(Matrix::from_rows(weights, m), Matrix::identity(n));
  Rref r = rref(aug);
  if (r.rows.size() != n || r.pivots.back() >= m) throw Error("internal", "cycle weights are dependent");
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(chosen[0].size(), Rational(0));
    for (auto& [c, val] : r.rows[j])
      if (c >= m) v = add(v, scale(chosen[c - m], val));
    out.push_back(from_kernel_vector(st, p, v));
  }
  return out;
}

TropicalCycle hodge_to_cycle(const SteenbrinkPage& st, const HodgeClass& a) {
  if (!is_compatible(st, a)) throw Error("incompatible-class", "class is not a cocycle of K^{0,2p}");
  const FaceComplex& x = st.complex();
  const int d = static_cast<int>(st.dim());
  if (a.p < 0 || a.p > d) throw Error("schema", "degree out of range");
  TropicalCycle c;
  c.p = a.p;
  c.k = static_cast<std::size_t>(d - a.p);
  c.faces = open_k_faces(x, c.k);
  c.weights.assign(c.faces.size(), Rational(0));
  const auto p = static_cast<std::size_t>(a.p);

  // local weights w_v(sigma) = deg(alpha_v x_sigma)
  std::map<std::size_t, std::map<std::size_t, Rational>> local;
  for (auto& [v, alpha] : a.vertices) {
    const ChowRing& r = st.local().ring(v);
    const StarFan& sf = st.local().star(v);
    for (auto cone : sf.fan.cones_of_dim(c.k))
      local[v][sf.cone_face[cone]] = r.degree(r.product(p, alpha, c.k, r.cone_class(cone)));
  }
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    std::size_t eta = c.faces[i];
    bool found = false;
    for (auto& [v, w] : local) {
      if (!x.leq(v, eta)) continue;
      Rational val = w.at(eta);
      if (!found) {
        c.weights[i] = val;
        found = true;
      } else if (val != c.weights[i]) {
        throw Error("gluing-conflict", "local weights disagree on face " + x.labels[eta]);
      }
    }
    if (!found && !a.vertices.empty()) throw Error("internal", "cycle face without a finite vertex");
  }
  if (!is_balanced(x, c.k, c.weights)) throw Error("internal", "glued weight is not balanced");
  return c;
}

Rational degree_pairing(const SteenbrinkPage& st, const HodgeClass& a, const HodgeClass& b) {
  if (a.p + b.p != static_cast<int>(st.dim())) throw Error("degree-mismatch", "classes are not complementary");
  Rational s(0);
  for (auto& [v, alpha] : a.vertices) {
    auto it = b.vertices.find(v);
    if (it == b.vertices.end()) continue;
    s += st.local().ring(v).pairing(static_cast<std::size_t>(a.p), alpha, it->second);
  }
  return s;
}

Rational weight_pairing(const SteenbrinkPage& st, const HodgeClass& b, const TropicalCycle& c) {
  if (static_cast<std::size_t>(b.p) != c.k) throw Error("degree-mismatch", "class and cycle do not pair");
  Rational s(0);
  for (auto& [v, beta] : b.vertices) {
    const ChowRing& r = st.local().ring(v);
    const StarFan& sf = st.local().star(v);
    const auto& basis = r.basis(c.k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (beta[i] == 0) continue;
      s += beta[i] * c.weights[position(c.faces, sf.cone_face[basis[i]])];
    }
  }
  return s;
}

bool verify_class(const SteenbrinkPage& st, const HodgeClass& a, const TropicalCycle& c) {
  const int d = static_cast<int>(st.dim());
  if (c.p != a.p || c.k != static_cast<std::size_t>(d - a.p)) return false;
  if (!is_balanced(st.complex(), c.k, c.weights)) return false;
  try {
    if (!numerical_vs_homological(st, a.p).nondegenerate) return false;
  } catch (const Error&) {
    return false;
  }
  for (auto& b : hodge_locus_basis(st, d - a.p))
    if (degree_pairing(st, a, b) != weight_pairing(st, b, c)) return false;
  return true;
}

Vec zigzag_representative(const SteenbrinkPage& st, const TropicalComplex& t, const HodgeClass& a,
                          bool alternate) {
  if (!is_compatible(st, a)) throw Error("not-primitive", "class is not in the kernel of the monodromy");
  const FaceComplex& x = st.complex();
  const LocalChow& lc = st.local();
  const auto p = static_cast<std::size_t>(a.p);

  // x_k[gamma] in A^{p-k}(star gamma)
  std::map<std::size_t, Vec> cur;
  for (auto& [v, alpha] : a.vertices)
    if (!is_zero(alpha)) cur[v] = alpha;
  for (std::size_t k = 0; k < p; ++k) {
    std::map<std::size_t, Vec> next;
    for (auto& [g, val] : cur) {
      auto cof = same_sed_cofacets(x, g);
      if (alternate) std::reverse(cof.begin(), cof.end());
      Matrix m(val.size(), 0);
      for (auto dlt : cof) {
        Matrix gy = lc.gysin(g, dlt, p - k - 1);
        m = Matrix::hstack(m, sign(x, g, dlt) < 0 ? -gy : gy);
      }
      auto y = solve_choice(m, val, alternate);
      if (!y) throw Error("zigzag-inconsistent", "Gysin images do not reach the class at " + x.labels[g]);
      std::size_t off = 0;
      for (auto dlt : cof) {
        std::size_t n = lc.ring(dlt).dim(p - k - 1);
        Vec piece(y->begin() + static_cast<long>(off), y->begin() + static_cast<long>(off + n));
        off += n;
        if (is_zero(piece)) continue;
        Vec& tgt = next[dlt];
        if (tgt.empty()) tgt.assign(n, Rational(0));
        tgt = add(tgt, sign(x, g, dlt) < 0 ? scale(piece, Rational(-1)) : piece);
      }
    }
    cur = std::move(next);
  }

  // c in C^{p,p} with c_gamma(n_gamma) = b_gamma on open p-faces and dc = 0
  const auto faces = x.of_dim(p);
  const auto off = t.cochain_offsets(p, p);
  GradedComplex cc = t.cochains(p);
  const std::size_t n = off.back();
  Matrix dp = cc.d(static_cast<int>(p));
  Matrix sys(faces.size() + dp.rows(), n);
  Vec rhs(sys.rows(), Rational(0));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!x.faces[faces[i]].sed.empty()) continue;
    Vec u = canonical_coords(t, faces[i], p);
    for (std::size_t j = 0; j < u.size(); ++j) sys.set(i, off[i] + j, u[j]);
    auto it = cur.find(faces[i]);
    if (it != cur.end()) rhs[i] = it->second.at(0);
  }
  sys.set_block(faces.size(), 0, dp);
  auto c = solve_choice(sys, rhs, alternate);
  if (!c) throw Error("zigzag-inconsistent", "no cocycle with the prescribed values");
  return *c;
}

Rational steenbrink_mw_pairing(const SteenbrinkPage& st, const HodgeClass& a, const Vec& w) {
  const auto p = static_cast<std::size_t>(a.p);
  auto faces = open_k_faces(st.complex(), p);
  Rational s(0);
  for (auto& [v, alpha] : a.vertices) {
    const ChowRing& r = st.local().ring(v);
    const StarFan& sf = st.local().star(v);
    const auto& basis = r.basis(p);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (alpha[i] != 0) s += alpha[i] * w[position(faces, sf.cone_face[basis[i]])];
  }
  return s;
}

Rational cochain_mw_pairing(const TropicalComplex& t, std::size_t p, const Vec& c, const Vec& w) {
  const FaceComplex& x = t.complex();
  auto faces = x.of_dim(p);
  auto off = t.cochain_offsets(p, p);
  auto open = open_k_faces(x, p);
  Rational s(0);
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (w[i] == 0) continue;
    std::size_t j = position(faces, open[i]);
    Vec u = canonical_coords(t, open[i], p);
    Vec seg(c.begin() + static_cast<long>(off[j]), c.begin() + static_cast<long>(off[j + 1]));
    s += w[i] * dot(seg, u);
  }
  return s;
}

NumericalReport numerical_vs_homological(const SteenbrinkPage& st, int p) {
  const int d = static_cast<int>(st.dim());
  NumericalReport rep;
  rep.p = p;
  rep.q = d - p;
  auto a = hodge_locus_basis(st, p), b = hodge_locus_basis(st, rep.q);
  rep.pairing = Matrix(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) rep.pairing.set(i, j, degree_pairing(st, a[i], b[j]));
  rep.nondegenerate = a.size() == b.size() && rank(rep.pairing) == a.size();
  if (!rep.nondegenerate) throw Error("degenerate-kernel-pairing", "kernels of N do not pair perfectly");

  auto ker = [&](int r) { return kernel_basis(cohomology_monodromy(st, 0, 2 * r, 1)).as_columns(); };
  auto img = [&](int r) { return cohomology_monodromy(st, -2, 2 * r + 2, 1); };
  Matrix g = cohomology_pairing(st, 0, 2 * p);  // H^0(2p) x H^0(2q)
  Matrix kp = ker(p), kq = ker(rep.q), ip = img(p), iq = img(rep.q);
  rep.ker_perp_im = (kp.transpose() * g * iq).is_zero() && (ip.transpose() * g * kq).is_zero();
  auto splits = [](const Matrix& k, const Matrix& i) {
    return k.cols() + rank(i) == k.rows() && rank(Matrix::hstack(k, i)) == k.rows();
  };
  rep.decomposition = splits(kp, ip) && splits(kq, iq);
  return rep;
}

}  // namespace trophodge
