#include "trophodge/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace trophodge {

Integer gcd_of(const IVec& v) {
  Integer g = 0;
  for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IVec primitive(const IVec& v) {
  Integer g = gcd_of(v);
  if (g == 0) throw Error("zero-vector", "primitive vector of zero");
  IVec r(v);
  for (auto& x : r) x /= g;
  return r;
}

Vec to_vec(const IVec& v) {
  Vec r;
  r.reserve(v.size());
  for (auto& x : v) r.emplace_back(x);
  return r;
}

IVec to_ivec(const Vec& v) {
  IVec r;
  r.reserve(v.size());
  for (auto& x : v) {
    if (x.get_den() != 1) throw Error("not-integral", "vector is not integral");
    r.push_back(x.get_num());
  }
  return r;
}

IVec image(const std::vector<IVec>& rows, const IVec& v) {
  IVec r(rows.size(), Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += rows[i][j] * v[j];
  return r;
}

Matrix to_matrix(const std::vector<IVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) m.set(i, j, Rational(rows[i][j]));
  return m;
}

namespace {

void sub_mul(IVec& a, const Integer& q, const IVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

void negate(IVec& a) {
  for (auto& x : a) x = -x;
}

// Euclid on column c over rows [r, end); ops mirrored on `shadow` if given.
// Returns false if the column is zero there.
bool clear_column(std::vector<IVec>& a, std::vector<IVec>* shadow, std::size_t r, std::size_t c) {
  for (;;) {
    std::size_t best = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
    if (best == a.size()) return false;
    std::swap(a[best], a[r]);
    if (shadow) std::swap((*shadow)[best], (*shadow)[r]);
    bool done = true;
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      sub_mul(a[i], q, a[r]);
      if (shadow) sub_mul((*shadow)[i], q, (*shadow)[r]);
      if (a[i][c] != 0) done = false;
    }
    if (done) break;
  }
  if (a[r][c] < 0) {
    negate(a[r]);
    if (shadow) negate((*shadow)[r]);
  }
  return true;
}

}  // namespace

std::vector<IVec> hnf_rows(std::vector<IVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    if (!clear_column(rows, nullptr, r, c)) continue;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      sub_mul(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

LatticeReduction reduce_generators(const std::vector<IVec>& gens, std::size_t n) {
  const std::size_t k = gens.size();
  std::vector<IVec> a(n, IVec(k, Integer(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = gens[j][i];
  LatticeReduction out;
  out.V.assign(n, IVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) out.V[i][i] = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c)
    if (clear_column(a, &out.V, r, c)) ++r;
  out.rank = r;
  out.H.assign(a.begin(), a.begin() + r);
  return out;
}

bool is_unimodular_set(const std::vector<IVec>& gens, std::size_t n) {
  if (gens.empty()) return true;
  auto red = reduce_generators(gens, n);
  if (red.rank != gens.size()) return false;
  for (std::size_t i = 0; i < red.rank; ++i)
    if (abs(red.H[i][i]) != 1) return false;
  return true;
}

std::vector<IVec> complement_projection(const std::vector<IVec>& gens, std::size_t n) {
  auto red = reduce_generators(gens, n);
  std::vector<IVec> p(red.V.begin() + red.rank, red.V.end());
  if (p.empty()) return p;
  return hnf_rows(std::move(p));
}

const std::vector<Subset>& subsets(std::size_t m, std::size_t k) {
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Subset>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Subset> out;
  if (k <= m) {
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    for (;;) {
      out.push_back(s);
      std::size_t i = k;
      while (i > 0 && s[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t binom(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

std::size_t subset_index(std::size_t m, const Subset& s) {
  const auto& all = subsets(m, s.size());
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s) throw Error("shape", "subset not found");
  return static_cast<std::size_t>(it - all.begin());
}

Vec wedge(const std::vector<Vec>& vs, std::size_t m) {
  const std::size_t k = vs.size();
  const auto& ss = subsets(m, k);
  Vec out(ss.size(), Rational(0));
  for (std::size_t t = 0; t < ss.size(); ++t) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.set(i, j, vs[j][ss[t][i]]);
    out[t] = k == 0 ? Rational(1) : determinant(minor);
  }
  return out;
}

Vec wedge_forms(const Vec& a, std::size_t p, const Vec& b, std::size_t q, std::size_t m) {
  const auto& sa = subsets(m, p);
  const auto& sb = subsets(m, q);
  Vec out(binom(m, p + q), Rational(0));
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (b[j] == 0) continue;
      Subset k;
      std::set_union(sa[i].begin(), sa[i].end(), sb[j].begin(), sb[j].end(),
                     std::back_inserter(k));
      if (k.size() != p + q) continue;
      int inv = 0;
      for (auto x : sa[i])
        for (auto y : sb[j])
          if (x > y) ++inv;
      Rational v = a[i] * b[j];
      out[subset_index(m, k)] += (inv % 2 ? -v : v);
    }
  }
  return out;
}

Matrix exterior_power(const Matrix& q, std::size_t k) {
  const auto& rs = subsets(q.rows(), k);
  const auto& cs = subsets(q.cols(), k);
  Matrix out(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (k == 0) {
        out.set(i, j, 1);
        continue;
      }
      Matrix minor(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) minor.set(a, b, q.at(rs[i][a], cs[j][b]));
      out.set(i, j, determinant(minor));
    }
  return out;
}

}  // namespace trophodge
