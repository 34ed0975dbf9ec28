#include "trophodge/graded_complex.hpp"

#include <algorithm>

namespace trophodge {

void GradedComplex::set_dim(int k, std::size_t n) {
  if (n == 0)
    dims_.erase(k);
  else
    dims_[k] = n;
}

void GradedComplex::set_d(int k, Matrix m) {
  if (m.rows() != dim(k + 1) || m.cols() != dim(k))
    throw Error("shape", "differential has the wrong shape in degree " + std::to_string(k));
  if (m.rows() == 0 || m.cols() == 0) {
    d_.erase(k);
    return;
  }
  d_[k] = std::move(m);
}

std::size_t GradedComplex::dim(int k) const {
  auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

Matrix GradedComplex::d(int k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  return Matrix(dim(k + 1), dim(k));
}

int GradedComplex::lo() const { return dims_.empty() ? 1 : dims_.begin()->first; }
int GradedComplex::hi() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

bool GradedComplex::is_complex() const {
  for (int k = lo(); k < hi(); ++k)
    if (!(d(k + 1) * d(k)).is_zero()) return false;
  return true;
}

std::size_t GradedComplex::cohomology_dim(int k) const {
  std::size_t n = dim(k);
  if (n == 0) return 0;
  return n - rank(d(k)) - rank(d(k - 1));
}

std::map<int, std::size_t> GradedComplex::cohomology_dims() const {
  std::map<int, std::size_t> out;
  for (int k = lo(); k <= hi(); ++k) out[k] = cohomology_dim(k);
  return out;
}

GradedComplex shift(const GradedComplex& c, int n) {
  GradedComplex s;
  for (int k = c.lo() - n; k <= c.hi() - n; ++k) s.set_dim(k, c.dim(k + n));
  for (int k = c.lo() - n; k <= c.hi() - n; ++k) {
    Matrix m = c.d(k + n);
    s.set_d(k, n % 2 ? -m : m);
  }
  return s;
}

Matrix chain_map_at(const ChainMap& f, int k, std::size_t rows, std::size_t cols) {
  auto it = f.find(k);
  if (it == f.end()) return Matrix(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw Error("shape", "chain map has the wrong shape in degree " + std::to_string(k));
  return it->second;
}

bool is_chain_map(const GradedComplex& a, const GradedComplex& b, const ChainMap& f) {
  int lo = std::min(a.lo(), b.lo()) - 1, hi = std::max(a.hi(), b.hi()) + 1;
  for (int k = lo; k <= hi; ++k) {
    Matrix fk = chain_map_at(f, k, b.dim(k), a.dim(k));
    Matrix fk1 = chain_map_at(f, k + 1, b.dim(k + 1), a.dim(k + 1));
    if (!(b.d(k) * fk == fk1 * a.d(k))) return false;
  }
  return true;
}

GradedComplex mapping_cone(const GradedComplex& a, const GradedComplex& b, const ChainMap& f) {
  GradedComplex c;
  int lo = std::min(a.lo() - 1, b.lo()), hi = std::max(a.hi() - 1, b.hi());
  for (int k = lo; k <= hi; ++k) c.set_dim(k, a.dim(k + 1) + b.dim(k));
  for (int k = lo; k < hi; ++k) {
    std::size_t a0 = a.dim(k + 1), b0 = b.dim(k), a1 = a.dim(k + 2), b1 = b.dim(k + 1);
    Matrix m(a1 + b1, a0 + b0);
    m.set_block(0, 0, -a.d(k + 1));
    m.set_block(a1, 0, chain_map_at(f, k + 1, b1, a0));
    m.set_block(a1, a0, b.d(k));
    c.set_d(k, m);
  }
  return c;
}

Cohomology::Cohomology(const GradedComplex& c, int k) : n_(c.dim(k)), dk_(c.d(k)) {
  z_ = kernel_basis(dk_);
  b_ = image_basis(c.d(k - 1));
  b_.ambient_dim = n_;
  Matrix bm = b_.as_columns();
  Matrix zm = z_.as_columns();
  for (auto j : greedy_complement(bm, zm)) reps_.push_back(z_.basis[j]);
  std::vector<Vec> cols = b_.basis;
  cols.insert(cols.end(), reps_.begin(), reps_.end());
  basis_ = Matrix::from_columns(cols, n_);
}

bool Cohomology::is_cocycle(const Vec& v) const { return is_zero(dk_.apply(v)); }

bool Cohomology::is_coboundary(const Vec& v) const { return contains(b_, v); }

Vec Cohomology::coords(const Vec& v) const {
  if (!is_cocycle(v)) throw Error("not-a-cocycle", "vector is not a cocycle");
  if (reps_.empty()) return {};
  auto x = solve(basis_, v);
  if (!x) throw Error("internal", "cocycle outside Z = B + reps");
  return Vec(x->begin() + b_.dim(), x->end());
}

Matrix induced_map(const Cohomology& src, const Cohomology& dst, const Matrix& f) {
  Matrix m(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Vec c = dst.coords(f.apply(src.reps()[j]));
    for (std::size_t i = 0; i < c.size(); ++i) m.set(i, j, c[i]);
  }
  return m;
}

}  // namespace trophodge
