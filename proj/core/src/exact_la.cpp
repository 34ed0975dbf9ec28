#include "trophodge/exact_la.hpp"

#include <algorithm>
#include <cctype>

namespace trophodge {

std::string to_string(const Rational& x) {
  Rational q(x);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto ok_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num, true) || !ok_int(den, false))
    throw Error("bad-rational", "not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw Error("bad-rational", "zero denominator: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scale(const Vec& v, const Rational& c) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---- Matrix ----

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (sparse())
    sparse_.resize(rows);
  else
    dense_.assign(rows * cols, Rational(0));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (cols[j][i] != 0) m.set(i, j, cols[j][i]);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("shape", "hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("shape", "vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

void Matrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error("shape", "matrix index out of range");
}

Rational Matrix::at(std::size_t i, std::size_t j) const {
  check(i, j);
  if (!sparse()) return dense_[i * cols_ + j];
  auto it = sparse_[i].find(j);
  return it == sparse_[i].end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v) {
  check(i, j);
  if (!sparse()) {
    dense_[i * cols_ + j] = v;
  } else if (v == 0) {
    sparse_[i].erase(j);
  } else {
    sparse_[i][j] = v;
  }
}

void Matrix::add(std::size_t i, std::size_t j, const Rational& v) {
  if (v == 0) return;
  set(i, j, at(i, j) + v);
}

std::vector<std::pair<std::size_t, Rational>> Matrix::row_entries(std::size_t i) const {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (!sparse()) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (dense_[i * cols_ + j] != 0) out.emplace_back(j, dense_[i * cols_ + j]);
  } else {
    out.assign(sparse_[i].begin(), sparse_[i].end());
  }
  return out;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_, Rational(0));
  for (auto& [j, v] : row_entries(i)) r[j] = v;
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : row_entries(i)) t.set(j, i, v);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("shape", "apply: length mismatch");
  Vec y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : row_entries(i)) y[i] += v * x[j];
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("shape", "product: inner dimension mismatch");
  Matrix r(rows_, o.cols_);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> orows(o.rows_);
  for (std::size_t k = 0; k < o.rows_; ++k) orows[k] = o.row_entries(k);
  for (std::size_t i = 0; i < rows_; ++i) {
    Vec acc(o.cols_, Rational(0));
    for (auto& [k, a] : row_entries(i))
      for (auto& [j, b] : orows[k]) acc[j] += a * b;
    for (std::size_t j = 0; j < o.cols_; ++j)
      if (acc[j] != 0) r.set(i, j, acc[j]);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape", "sum: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : o.row_entries(i)) r.add(i, j, v);
  return r;
}

Matrix Matrix::operator-() const { return scaled(-1); }
Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  if (c == 0) return r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : row_entries(i)) r.set(i, j, v * c);
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("shape", "block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (auto& [j, v] : row_entries(r0 + i))
      if (j >= c0 && j < c0 + nc) b.set(i, j - c0, v);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error("shape", "set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& [j, v] : b.row_entries(i)) set(r0 + i, c0 + j, v);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix r(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational v = at(i, cols[k]);
      if (v != 0) r.set(i, k, v);
    }
  return r;
}

bool Matrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!row_entries(i).empty()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (row_entries(i) != o.row_entries(i)) return false;
  return true;
}

// ---- elimination ----

namespace {

// dense: scale rows to integers, Bareiss forward pass, then back-substitute over Q
Rref rref_dense(const Matrix& m, bool forward_only) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) {
      Rational v = m.at(i, j);
      if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < C; ++j) {
      Rational v = m.at(i, j);
      a[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  Rref out;
  out.cols = C;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t j = 0; j < C && r < R; ++j) {
    std::size_t p = r;
    while (p < R && a[p][j] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t l = j + 1; l < C; ++l) {
        a[i][l] = a[r][j] * a[i][l] - a[i][j] * a[r][l];
        mpz_divexact(a[i][l].get_mpz_t(), a[i][l].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][j] = 0;
    }
    prev = a[r][j];
    out.pivots.push_back(j);
    ++r;
  }
  if (forward_only) return out;

  std::vector<Vec> q(r, Vec(C));
  for (std::size_t i = 0; i < r; ++i) {
    Integer lead = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < C; ++j) {
      q[i][j] = Rational(a[i][j], lead);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (q[i][pc] == 0) continue;
      Rational f = q[i][pc];
      for (std::size_t j = pc; j < C; ++j)
        if (q[k][j] != 0) q[i][j] -= f * q[k][j];
    }
  }
  out.rows.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (q[i][j] != 0) out.rows[i].emplace_back(j, q[i][j]);
  return out;
}

// dst += c * src, both sorted by column
void axpy(SparseRow& dst, const Rational& c, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, c * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second + c * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

const Rational* entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// sparse: bucket rows by leading column, pivot = fewest nonzeros
Rref rref_sparse(const Matrix& m, bool forward_only) {
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto e = m.row_entries(i);
    if (!e.empty()) rows.push_back(SparseRow(e.begin(), e.end()));
  }
  std::map<std::size_t, std::vector<std::size_t>> bucket;
  for (std::size_t i = 0; i < rows.size(); ++i) bucket[rows[i].front().first].push_back(i);

  Rref out;
  out.cols = m.cols();
  while (!bucket.empty()) {
    auto it = bucket.begin();
    std::size_t col = it->first;
    std::vector<std::size_t> ids = std::move(it->second);
    bucket.erase(it);
    std::size_t best = 0;
    for (std::size_t k = 1; k < ids.size(); ++k)
      if (rows[ids[k]].size() < rows[ids[best]].size()) best = k;
    std::size_t piv = ids[best];
    Rational inv = 1 / rows[piv].front().second;
    for (auto& e : rows[piv]) e.second *= inv;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (k == best) continue;
      SparseRow& r = rows[ids[k]];
      Rational c = -r.front().second;
      axpy(r, c, rows[piv]);
      if (!r.empty()) bucket[r.front().first].push_back(ids[k]);
    }
    out.pivots.push_back(col);
    out.rows.push_back(std::move(rows[piv]));
  }
  if (forward_only) return out;
  for (std::size_t k = out.rows.size(); k-- > 0;) {
    std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational* v = entry(out.rows[i], pc);
      if (!v) continue;
      Rational c = -*v;
      axpy(out.rows[i], c, out.rows[k]);
    }
  }
  return out;
}

}  // namespace

Rref rref(const Matrix& m) {
  return m.sparse() ? rref_sparse(m, false) : rref_dense(m, false);
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return (m.sparse() ? rref_sparse(m, true) : rref_dense(m, true)).pivots.size();
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("shape", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
  Rational det = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a[p][j] == 0) ++p;
    if (p == n) return 0;
    if (p != j) {
      std::swap(a[p], a[j]);
      det = -det;
    }
    det *= a[j][j];
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[j][j];
      for (std::size_t l = j; l < n; ++l) a[i][l] -= f * a[j][l];
    }
  }
  return det;
}

Matrix Subspace::as_columns() const { return Matrix::from_columns(basis, ambient_dim); }

Subspace kernel_basis(const Matrix& m) {
  Subspace k;
  k.ambient_dim = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : r.pivots) is_piv[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      if (const Rational* v = entry(r.rows[i], f)) x[r.pivots[i]] = -*v;
    k.basis.push_back(std::move(x));
  }
  return k;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.rows() == 0) return {};
  return rref(m).pivots;
}

Subspace image_basis(const Matrix& m) {
  Subspace s;
  s.ambient_dim = m.rows();
  for (auto j : independent_columns(m)) s.basis.push_back(m.column(j));
  return s;
}

Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vecs) {
  return image_basis(Matrix::from_columns(vecs, ambient_dim));
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("shape", "solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) aug.set(i, m.cols(), b[i]);
  Rref r = rref(aug);
  Vec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;
    if (const Rational* v = entry(r.rows[i], m.cols())) x[r.pivots[i]] = *v;
  }
  return x;
}

std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error("shape", "solve_many: row mismatch");
  Rref r = rref(Matrix::hstack(m, b));
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= m.cols()) return std::nullopt;
    for (auto& [j, v] : r.rows[i])
      if (j >= m.cols()) x.set(r.pivots[i], j - m.cols(), v);
  }
  return x;
}

bool contains(const Subspace& s, const Vec& v) {
  if (is_zero(v)) return true;
  if (s.basis.empty()) return false;
  return solve(s.as_columns(), v).has_value();
}

std::size_t quotient_dim(const Subspace& ambient, const Subspace& sub) {
  if (ambient.ambient_dim != sub.ambient_dim)
    throw Error("not-a-subspace", "ambient dimensions differ");
  if (sub.dim() == 0) return ambient.dim();
  Matrix a = ambient.as_columns();
  Matrix both = Matrix::hstack(a, sub.as_columns());
  if (rank(both) != rank(a)) throw Error("not-a-subspace", "sub is not contained in ambient");
  return ambient.dim() - rank(sub.as_columns());
}

std::vector<std::size_t> greedy_complement(const Matrix& base, const Matrix& extra) {
  std::vector<std::size_t> out;
  if (extra.cols() == 0) return out;
  for (auto p : independent_columns(Matrix::hstack(base, extra)))
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

}  // namespace trophodge
