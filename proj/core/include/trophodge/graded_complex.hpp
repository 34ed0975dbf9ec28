#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "trophodge/exact_la.hpp"

namespace trophodge {

// Bounded cochain complex; d(k): C^k -> C^{k+1}. Missing terms are zero.
class GradedComplex {
 public:
  void set_dim(int k, std::size_t n);
  void set_d(int k, Matrix m);
  std::size_t dim(int k) const;
  Matrix d(int k) const;
  bool has_d(int k) const { return d_.count(k) > 0; }
  // smallest/largest degree with a nonzero term; lo() > hi() if empty
  int lo() const;
  int hi() const;
  bool empty() const { return lo() > hi(); }
  bool is_complex() const;
  std::size_t cohomology_dim(int k) const;
  std::map<int, std::size_t> cohomology_dims() const;

 private:
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> d_;
};

// C[n]^k = C^{k+n}, d multiplied by (-1)^n
GradedComplex shift(const GradedComplex& c, int n);

// per-degree maps f(k): A^k -> B^k
using ChainMap = std::map<int, Matrix>;
Matrix chain_map_at(const ChainMap& f, int k, std::size_t rows, std::size_t cols);
bool is_chain_map(const GradedComplex& a, const GradedComplex& b, const ChainMap& f);

// Cone^k = A^{k+1} + B^k, d(a, b) = (-d a, f a + d b)
GradedComplex mapping_cone(const GradedComplex& a, const GradedComplex& b, const ChainMap& f);

// H^k with chosen cocycle representatives
class Cohomology {
 public:
  Cohomology(const GradedComplex& c, int k);
  std::size_t dim() const { return reps_.size(); }
  std::size_t cochain_dim() const { return n_; }
  const std::vector<Vec>& reps() const { return reps_; }
  Matrix reps_matrix() const { return Matrix::from_columns(reps_, n_); }
  const Subspace& cocycles() const { return z_; }
  const Subspace& coboundaries() const { return b_; }
  bool is_cocycle(const Vec& v) const;
  bool is_coboundary(const Vec& v) const;
  Vec coords(const Vec& cocycle) const;  // throws not-a-cocycle

 private:
  std::size_t n_ = 0;
  Matrix dk_;
  Subspace z_, b_;
  std::vector<Vec> reps_;
  Matrix basis_;  // [B | reps]
};

// matrix of the map induced on cohomology by a cochain-level map f
Matrix induced_map(const Cohomology& src, const Cohomology& dst, const Matrix& f);

}  // namespace trophodge
