#include "trophodge/checks.hpp"

#include <random>

#include "trophodge/clemens_schmid.hpp"
#include "trophodge/error.hpp"
#include "trophodge/hodge_cycles.hpp"

namespace trophodge {

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> u(-3, 3);
  Vec v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

long euler(const std::vector<std::size_t>& dims) {
  long s = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) s += (q % 2 ? -1 : 1) * static_cast<long>(dims[q]);
  return s;
}

}  // namespace

bool cochains_consistent(const TropicalComplex& t) {
  const std::size_t d = t.complex().dim();
  for (std::size_t p = 0; p <= d; ++p) {
    GradedComplex c = t.cochains(p);
    if (!c.is_complex()) return false;
    std::vector<std::size_t> dims;
    for (std::size_t q = 0; q <= d; ++q) dims.push_back(c.dim(static_cast<int>(q)));
    if (euler(dims) != euler(t.hodge_numbers(p))) return false;
  }
  return true;
}

bool poincare_nondegenerate(const TropicalComplex& t) {
  OrderComplex o(t);
  if (!o.fundamental_is_cycle()) return false;
  const std::size_t d = o.dim();
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t q = 0; q <= d; ++q) {
      Matrix g = poincare_pairing(o, p, q);
      if (g.rows() != g.cols() || rank(g) != g.rows()) return false;
    }
  return true;
}

bool page_identities(const SteenbrinkPage& st) {
  const int n = static_cast<int>(st.dim());
  for (int b = 0; b <= 2 * n; b += 2) {
    if (!st.row(b).is_complex()) return false;
    for (int a = -n; a < n; ++a)
      if (b >= 2 && !(st.monodromy(a + 1, b) * st.d(a, b) == st.d(a + 2, b - 2) * st.monodromy(a, b)))
        return false;
  }
  return true;
}

bool psi_identities(const SteenbrinkPage& st, std::uint64_t seed, int trials) {
  const int n = static_cast<int>(st.dim());
  const Rational sgn(n % 2 ? -1 : 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ua(-n, n), ub(0, n);
  for (int trial = 0; trial < trials; ++trial) {
    int a = ua(rng), b = 2 * ub(rng);
    StElement x{a, b, random_vec(rng, st.dim(a, b))};
    StElement y{-a, 2 * n - b, random_vec(rng, st.dim(-a, 2 * n - b))};
    if (st.psi(x, y) != sgn * st.psi(y, x)) return false;
    StElement yn{-a - 2, 2 * n - b + 2, random_vec(rng, st.dim(-a - 2, 2 * n - b + 2))};
    StElement nx{a + 2, b - 2, st.monodromy(a, b).apply(x.v)};
    StElement ny{-a, 2 * n - b, st.monodromy(-a - 2, 2 * n - b + 2).apply(yn.v)};
    if (st.psi(nx, yn) + st.psi(x, ny) != 0) return false;
    StElement yd{-a - 1, 2 * n - b, random_vec(rng, st.dim(-a - 1, 2 * n - b))};
    StElement dx{a + 1, b, st.d(a, b).apply(x.v)};
    StElement dy{-a, 2 * n - b, st.d(-a - 1, 2 * n - b).apply(yd.v)};
    if (st.psi(dx, yd) + st.psi(x, dy) != 0) return false;
  }
  return true;
}

bool steenbrink_comparison(const SteenbrinkPage& st, const TropicalComplex& t) {
  const int n = static_cast<int>(st.dim());
  for (int p = 0; p <= n; ++p) {
    auto h = t.hodge_numbers(static_cast<std::size_t>(p));
    auto rc = st.row_cohomology(2 * p);
    for (int q = 0; q <= n; ++q)
      if (rc[q - p] != h[static_cast<std::size_t>(q)]) return false;
  }
  return true;
}

bool zigzag_pairings(const SteenbrinkPage& st, const TropicalComplex& t) {
  const int n = static_cast<int>(st.dim());
  for (int p = 0; p <= n; ++p) {
    auto up = static_cast<std::size_t>(p);
    Subspace mw = minkowski_weights(st.complex(), up);
    GradedComplex cc = t.cochains(up);
    for (auto& a : hodge_locus_basis(st, p)) {
      Vec c = zigzag_representative(st, t, a);
      Vec c2 = zigzag_representative(st, t, a, true);
      if (!is_zero(cc.d(p).apply(c))) return false;
      Vec diff = add(c2, scale(c, Rational(-1)));
      if (p == 0 ? !is_zero(diff) : !solve(cc.d(p - 1), diff)) return false;
      for (auto& w : mw.basis)
        if (cochain_mw_pairing(t, up, c, w) != steenbrink_mw_pairing(st, a, w)) return false;
    }
  }
  return true;
}

bool hodge_round_trip(const SteenbrinkPage& st) {
  const int n = static_cast<int>(st.dim());
  for (int p = 0; p <= n; ++p)
    for (auto& a : hodge_locus_basis(st, p)) {
      TropicalCycle c = hodge_to_cycle(st, a);
      if (!is_balanced(st.complex(), c.k, c.weights) || !verify_class(st, a, c)) return false;
    }
  return true;
}

std::vector<Check> check_all(const FaceComplex& x, std::uint64_t seed) {
  std::vector<Check> out;
  auto run = [&](const std::string& name, auto&& f) {
    Check c{name, false, ""};
    try {
      c.ok = f();
    } catch (const Error& e) {
      c.detail = e.code() + ": " + e.what();
    }
    out.push_back(c);
  };
  TropicalComplex t(x);
  run("cochain-complexes", [&] { return cochains_consistent(t); });
  run("poincare-duality", [&] { return poincare_nondegenerate(t); });

  std::unique_ptr<SteenbrinkPage> st;
  try {
    st = std::make_unique<SteenbrinkPage>(x);
  } catch (const Error& e) {
    out.push_back({"steenbrink-page", false, e.code() + ": " + e.what()});
    return out;
  }
  const int n = static_cast<int>(st->dim());
  run("page-identities", [&] { return page_identities(*st); });
  run("psi-identities", [&] { return psi_identities(*st, seed); });
  run("steenbrink-comparison", [&] { return steenbrink_comparison(*st, t); });
  run("hard-lefschetz", [&] { return verify_hl(*st).ok(); });
  run("primitive-decomposition", [&] {
    auto pp = primitive_parts(*st);
    return pp.decomposition && pp.orthogonal;
  });
  run("clemens-schmid", [&] { return tropical_clemens_schmid(*st).ok(); });
  run("mapping-cone", [&] {
    for (int b = 0; b <= 2 * n; b += 2)
      if (!mapping_cone_check(*st, b).ok()) return false;
    return true;
  });
  run("hodge-cycles", [&] { return hodge_round_trip(*st); });
  run("numerical-homological", [&] {
    for (int p = 0; p <= n; ++p)
      if (!numerical_vs_homological(*st, p).ok()) return false;
    return true;
  });
  run("zigzag", [&] { return zigzag_pairings(*st, t); });
  return out;
}

}  // namespace trophodge
