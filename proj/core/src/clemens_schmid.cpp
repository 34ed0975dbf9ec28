#include "trophodge/clemens_schmid.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "trophodge/error.hpp"

namespace trophodge {

namespace {

struct Range {
  int lo = 0, hi = -1;
};

Range degrees(const LefschetzTriple& t) {
  Range r{0, -1};
  bool any = false;
  auto take = [&](int lo, int hi) {
    if (lo > hi) return;
    r.lo = any ? std::min(r.lo, lo) : lo;
    r.hi = any ? std::max(r.hi, hi) : hi;
    any = true;
  };
  take(t.c.lo(), t.c.hi());
  take(t.d.lo() - 2, t.d.hi());
  if (!any) return r;
  r.lo -= 2;
  r.hi += 2;
  return r;
}

Matrix lmap(const LefschetzTriple& t, int k) {
  return chain_map_at(t.l, k, t.d.dim(k + 2), t.c.dim(k));
}

Matrix inverse(const Matrix& m) {
  auto inv = solve_many(m, Matrix::identity(m.rows()));
  if (!inv) throw Error("internal", "matrix is not invertible");
  return *inv;
}

bool injective(const Matrix& m) { return rank(m) == m.cols(); }
bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

std::string hlabel(const char* space, int k) {
  return std::string("H^") + std::to_string(k) + "(" + space + ")";
}

// random_triple helpers

using Rng = std::mt19937_64;

int small(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(small(rng, -2, 2)));
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

// direct sum of Q[j] and (Q[j] -> Q[j+1]) pieces, then a random change of basis
GradedComplex random_complex(Rng& rng, int lo, int hi, std::size_t cap) {
  std::map<int, std::size_t> single, pair;
  std::map<int, std::size_t> dim;
  for (int j = lo; j <= hi; ++j) {
    std::size_t room = cap - std::min(cap, dim[j]);
    pair[j] = j < hi ? static_cast<std::size_t>(small(rng, 0, static_cast<int>(std::min<std::size_t>(room, 2)))) : 0;
    dim[j] += pair[j];
    dim[j + 1] += pair[j];
    room = cap - std::min(cap, dim[j]);
    single[j] = static_cast<std::size_t>(small(rng, 0, static_cast<int>(std::min<std::size_t>(room, 2))));
    dim[j] += single[j];
  }
  GradedComplex g;
  for (int j = lo; j <= hi; ++j) g.set_dim(j, dim[j]);
  std::map<int, Matrix> p, pinv;
  for (int j = lo; j <= hi + 1; ++j) {
    p[j] = random_invertible(rng, g.dim(j));
    pinv[j] = inverse(p[j]);
  }
  // layout in degree j: [incoming pair targets | outgoing pair sources | singles]
  for (int j = lo; j < hi; ++j) {
    Matrix m(g.dim(j + 1), g.dim(j));
    std::size_t in_j = j > lo ? pair[j - 1] : 0;
    for (std::size_t i = 0; i < pair[j]; ++i) m.set(i, in_j + i, Rational(1));
    g.set_d(j, p[j + 1] * m * pinv[j]);
  }
  return g;
}

// solutions f_j : X^j -> Y^{j+e} of d_Y f_j + f_{j+1} d_X = 0, random combination
ChainMap random_anticommuting(Rng& rng, const GradedComplex& x, const GradedComplex& y, int e, int lo,
                              int hi) {
  std::map<int, std::size_t> start;
  std::size_t n = 0;
  for (int j = lo; j <= hi; ++j) {
    start[j] = n;
    n += y.dim(j + e) * x.dim(j);
  }
  if (n == 0) return {};
  auto var = [&](int j, std::size_t r, std::size_t c) { return start[j] + r * x.dim(j) + c; };
  std::vector<Vec> eqs;
  for (int j = lo - 1; j <= hi; ++j) {
    // d_Y f_j + f_{j+1} d_X : X^j -> Y^{j+e+1}
    Matrix dy = y.d(j + e), dx = x.d(j);
    for (std::size_t i = 0; i < y.dim(j + e + 1); ++i)
      for (std::size_t k = 0; k < x.dim(j); ++k) {
        Vec eq(n, Rational(0));
        bool touched = false;
        if (j >= lo && j <= hi)
          for (std::size_t l = 0; l < y.dim(j + e); ++l)
            if (dy.at(i, l) != 0) {
              eq[var(j, l, k)] += dy.at(i, l);
              touched = true;
            }
        if (j + 1 >= lo && j + 1 <= hi)
          for (std::size_t l = 0; l < x.dim(j + 1); ++l)
            if (dx.at(l, k) != 0) {
              eq[var(j + 1, i, l)] += dx.at(l, k);
              touched = true;
            }
        if (touched) eqs.push_back(std::move(eq));
      }
  }
  Subspace sol = eqs.empty() ? kernel_basis(Matrix(0, n)) : kernel_basis(Matrix::from_rows(eqs, n));
  Vec v(n, Rational(0));
  for (auto& b : sol.basis) v = add(v, scale(b, Rational(small(rng, -1, 1))));
  ChainMap f;
  for (int j = lo; j <= hi; ++j) {
    Matrix m(y.dim(j + e), x.dim(j));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, v[var(j, r, c)]);
    f[j] = m;
  }
  return f;
}

Matrix at(const ChainMap& f, int j, std::size_t r, std::size_t c) { return chain_map_at(f, j, r, c); }

}  // namespace

bool ExactnessReport::ok() const {
  return lift_independent &&
         std::all_of(junctions.begin(), junctions.end(), [](const Junction& j) { return j.exact; });
}

bool hl_around_zero(const LefschetzTriple& t, bool on_cohomology) {
  Range r = degrees(t);
  for (int k = r.lo; k <= r.hi; ++k) {
    Matrix m = lmap(t, k - 1);
    if (on_cohomology) m = induced_map(Cohomology(t.c, k - 1), Cohomology(t.d, k + 1), m);
    if (k <= 0 && !injective(m)) return false;
    if (k >= 0 && !surjective(m)) return false;
  }
  return true;
}

KernelCokernel kernel_cokernel(const LefschetzTriple& t) {
  KernelCokernel kc;
  Range r = degrees(t);
  for (int j = r.lo; j <= r.hi; ++j) {
    Subspace ker = kernel_basis(lmap(t, j));
    kc.incl[j] = ker.as_columns();
    kc.k.set_dim(j, ker.dim());

    const std::size_t n = t.d.dim(j);
    Subspace im = image_basis(lmap(t, j - 2));
    im.ambient_dim = n;
    Matrix imm = im.as_columns();
    auto extra = greedy_complement(imm, Matrix::identity(n));
    Matrix e = Matrix::identity(n).select_columns(extra);
    Matrix inv = inverse(Matrix::hstack(imm, e));
    kc.proj[j] = inv.block(im.dim(), 0, extra.size(), n);
    kc.lift[j] = e;
    kc.r.set_dim(j, extra.size());
  }
  for (int j = r.lo; j < r.hi; ++j) {
    auto dk = solve_many(kc.incl[j + 1], t.c.d(j) * kc.incl[j]);
    if (!dk) throw Error("internal", "kernel of L is not a subcomplex");
    kc.k.set_d(j, *dk);
    kc.r.set_d(j, kc.proj[j + 1] * t.d.d(j) * kc.lift[j]);
  }
  return kc;
}

Matrix connecting_map(const LefschetzTriple& t, const KernelCokernel& kc, const Vec* shift) {
  Cohomology hr(kc.r, 0), hk(kc.k, 0);
  Matrix out(hk.dim(), hr.dim());
  Matrix lm1 = lmap(t, -1);
  if (!injective(lm1)) throw Error("chase-failure", "L is not injective on C^{-1}");
  for (std::size_t i = 0; i < hr.dim(); ++i) {
    Vec c = at(kc.lift, 0, t.d.dim(0), kc.r.dim(0)).apply(hr.reps()[i]);
    if (shift) c = add(c, lmap(t, -2).apply(*shift));
    Vec c1 = t.d.d(0).apply(c);
    auto b1 = solve(lm1, c1);
    if (!b1) throw Error("chase-failure", "d c has no preimage under L");
    Vec b2 = t.c.d(-1).apply(*b1);
    if (!is_zero(lmap(t, 0).apply(b2))) throw Error("chase-failure", "d b' is not in ker L");
    auto a2 = solve(at(kc.incl, 0, t.c.dim(0), kc.k.dim(0)), b2);
    if (!a2) throw Error("chase-failure", "d b' is not in K^0");
    if (!hk.is_cocycle(*a2)) throw Error("chase-failure", "a'' is not a cocycle");
    Vec co = hk.coords(*a2);
    for (std::size_t j = 0; j < co.size(); ++j) out.set(j, i, co[j]);
  }
  return out;
}

ExactnessReport clemens_schmid_sequences(const LefschetzTriple& t, std::uint64_t seed) {
  ExactnessReport rep;
  Range r = degrees(t);
  if (r.lo > r.hi) return rep;
  if (!hl_around_zero(t, false) || !hl_around_zero(t, true))
    throw Error("hl-failure", "L does not satisfy hard Lefschetz around 0");
  KernelCokernel kc = kernel_cokernel(t);

  Matrix d0 = connecting_map(t, kc);
  if (t.c.dim(-2)) {
    Rng rng(seed);
    Vec s(t.c.dim(-2));
    for (auto& v : s) v = small(rng, -3, 3);
    rep.lift_independent = connecting_map(t, kc, &s) == d0;
  }

  std::map<int, Cohomology> hk, hc, hd, hr;
  for (int j = r.lo - 2; j <= r.hi + 2; ++j) {
    hk.emplace(j, Cohomology(kc.k, j));
    hc.emplace(j, Cohomology(t.c, j));
    hd.emplace(j, Cohomology(t.d, j));
    hr.emplace(j, Cohomology(kc.r, j));
  }
  struct Step {
    std::string label;
    std::size_t dim;
    Matrix out;  // to the next space
  };
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Step> seq;
    int m0 = r.lo - 2;
    if (((m0 % 2) + 2) % 2 != parity) ++m0;
    for (int m = m0; m + 2 <= r.hi + 2; m += 2) {
      const Cohomology &k = hk.at(m), &c = hc.at(m), &d = hd.at(m + 2), &rr = hr.at(m + 2);
      const Cohomology& k2 = hk.at(m + 2);
      seq.push_back({hlabel("K", m), k.dim(), induced_map(k, c, at(kc.incl, m, t.c.dim(m), kc.k.dim(m)))});
      seq.push_back({hlabel("C", m), c.dim(), induced_map(c, d, lmap(t, m))});
      seq.push_back({hlabel("D", m + 2), d.dim(),
                     induced_map(d, rr, at(kc.proj, m + 2, kc.r.dim(m + 2), t.d.dim(m + 2)))});
      Matrix delta = m + 2 == 0 ? d0 : Matrix(k2.dim(), rr.dim());
      seq.push_back({hlabel("R", m + 2), rr.dim(), delta});
    }
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const Step& s = seq[i];
      if (s.dim == 0) continue;
      const Matrix& in = seq[i - 1].out;
      Junction j;
      j.label = s.label;
      j.dim = s.dim;
      j.image_rank = rank(in);
      j.kernel_dim = s.dim - rank(s.out);
      j.exact = (s.out * in).is_zero() && j.image_rank == j.kernel_dim;
      rep.junctions.push_back(j);
    }
  }
  return rep;
}

LefschetzTriple random_triple(std::uint64_t seed, std::size_t max_dim) {
  Rng rng(seed);
  const std::size_t cap = std::max<std::size_t>(1, max_dim / 2);
  for (;;) {
    GradedComplex s = random_complex(rng, -3, 1, cap);
    GradedComplex k = random_complex(rng, 0, 2, cap);
    GradedComplex r = random_complex(rng, -2, 0, cap);
    // C = S + K, D = S[2] + R, glued by x : S^j -> K^{j+1} and y : R^m -> S^{m-1};
    // L d_C = d_D L leaves no room for an S -> R block
    ChainMap x = random_anticommuting(rng, s, k, 1, -3, 1);
    ChainMap y = random_anticommuting(rng, r, s, -1, -2, 0);

    LefschetzTriple t;
    for (int j = -3; j <= 2; ++j) t.c.set_dim(j, s.dim(j) + k.dim(j));
    for (int m = -2; m <= 3; ++m) t.d.set_dim(m, s.dim(m - 2) + r.dim(m));
    std::map<int, Matrix> pc, pd;
    for (int j = -4; j <= 4; ++j) {
      pc[j] = random_invertible(rng, t.c.dim(j));
      pd[j] = random_invertible(rng, t.d.dim(j));
    }
    for (int j = -3; j < 2; ++j) {
      Matrix m(t.c.dim(j + 1), t.c.dim(j));
      m.set_block(0, 0, s.d(j));
      m.set_block(s.dim(j + 1), 0, at(x, j, k.dim(j + 1), s.dim(j)));
      m.set_block(s.dim(j + 1), s.dim(j), k.d(j));
      t.c.set_d(j, pc[j + 1] * m * inverse(pc[j]));
    }
    for (int mm = -2; mm < 3; ++mm) {
      Matrix m(t.d.dim(mm + 1), t.d.dim(mm));
      m.set_block(0, 0, s.d(mm - 2));
      m.set_block(0, s.dim(mm - 2), at(y, mm, s.dim(mm - 1), r.dim(mm)));
      m.set_block(s.dim(mm - 1), s.dim(mm - 2), r.d(mm));
      t.d.set_d(mm, pd[mm + 1] * m * inverse(pd[mm]));
    }
    for (int j = -3; j <= 2; ++j) {
      Matrix m(t.d.dim(j + 2), t.c.dim(j));
      for (std::size_t i = 0; i < s.dim(j); ++i) m.set(i, i, Rational(1));
      t.l[j] = pd[j + 2] * m * inverse(pc[j]);
    }
    if (hl_around_zero(t, true)) return t;
  }
}

GradedComplex double_cone(const SteenbrinkPage& st, int b) {
  const int d = static_cast<int>(st.dim());
  GradedComplex kc = st.kernel_complex(b + 2);
  auto dims = [&](int a) {
    return std::array<std::size_t, 3>{st.dim(a, b), st.dim(a - 1, b + 2), kc.dim(a)};
  };
  GradedComplex t;
  for (int a = -d; a <= d + 1; ++a) {
    auto n = dims(a);
    t.set_dim(a, n[0] + n[1] + n[2]);
  }
  for (int a = -d; a <= d; ++a) {
    auto s = dims(a), e = dims(a + 1);
    Matrix m(e[0] + e[1] + e[2], s[0] + s[1] + s[2]);
    m.set_block(0, 0, st.d(a, b));
    m.set_block(0, s[0], st.monodromy(a - 1, b + 2));
    m.set_block(e[0], s[0], -st.d(a - 1, b + 2));
    m.set_block(e[0], s[0] + s[1], st.kernel_inclusion(a, b + 2));
    m.set_block(e[0] + e[1], s[0] + s[1], kc.d(a));
    t.set_d(a, m);
  }
  return t;
}

ChainMap double_cone_projection(const SteenbrinkPage& st, int b) {
  const int d = static_cast<int>(st.dim());
  GradedComplex t = double_cone(st, b);
  ChainMap pi;
  for (int a = -d; a <= d + 1; ++a) {
    Matrix p = st.cokernel_projection(a, b);
    Matrix m(p.rows(), t.dim(a));
    m.set_block(0, 0, p);
    pi[a] = m;
  }
  return pi;
}

ConeReport mapping_cone_check(const SteenbrinkPage& st, int b) {
  ConeReport rep;
  rep.b = b;
  const int d = static_cast<int>(st.dim());
  GradedComplex src = st.row(b + 2), dst = shift(st.row(b), 2);
  ChainMap n;
  for (int a = -d; a <= d; ++a) n[a] = st.monodromy(a, b + 2);
  rep.cone = mapping_cone(src, dst, n).cohomology_dims();

  GradedComplex t = double_cone(st, b), r = st.cokernel_complex(b);
  ChainMap pi = double_cone_projection(st, b);
  rep.t_complex = t.is_complex() && is_chain_map(t, r, pi);
  rep.quasi_iso = rep.t_complex;
  for (int a = -d - 1; a <= d + 2; ++a) {
    Cohomology ht(t, a), hr(r, a);
    rep.t[a] = ht.dim();
    rep.r[a] = hr.dim();
    if (!rep.t_complex) continue;
    Matrix m = induced_map(ht, hr, chain_map_at(pi, a, r.dim(a), t.dim(a)));
    if (ht.dim() != hr.dim() || rank(m) != hr.dim()) rep.quasi_iso = false;
  }
  return rep;
}

LefschetzTriple steenbrink_triple(const SteenbrinkPage& st, int p) {
  LefschetzTriple t;
  t.c = st.row(2 * p + 2);
  t.d = st.row(2 * p);
  const int d = static_cast<int>(st.dim());
  for (int a = -d; a <= d; ++a) t.l[a] = st.monodromy(a, 2 * p + 2);
  return t;
}

ExactnessReport tropical_clemens_schmid(const SteenbrinkPage& st) {
  if (!verify_hl(st).ok()) throw Error("hl-failure", "monodromy does not satisfy hard Lefschetz");
  ExactnessReport out;
  const int d = static_cast<int>(st.dim());
  for (int p = -1; p <= d; ++p) {
    auto rep = clemens_schmid_sequences(steenbrink_triple(st, p), static_cast<std::uint64_t>(p + 2));
    out.lift_independent = out.lift_independent && rep.lift_independent;
    for (auto& j : rep.junctions) {
      j.label = "p=" + std::to_string(p) + " " + j.label;
      out.junctions.push_back(j);
    }
  }
  return out;
}

}  // namespace trophodge
