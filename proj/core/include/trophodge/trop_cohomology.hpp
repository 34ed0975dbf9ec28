#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "trophodge/graded_complex.hpp"
#include "trophodge/polyhedral.hpp"

namespace trophodge {

// Coefficient spaces F_p and the cellular cochain complexes C^{p,*}.
class TropicalComplex {
 public:
  explicit TropicalComplex(const FaceComplex& x) : x_(&x) {}
  const FaceComplex& complex() const { return *x_; }

  // basis of F_p(delta) as columns in Lambda^p of the stratum lattice
  const Matrix& coefficient_space(std::size_t delta, std::size_t p) const;
  std::size_t coefficient_dim(std::size_t delta, std::size_t p) const {
    return coefficient_space(delta, p).cols();
  }
  // F_p(delta) -> F_p(gamma) for gamma <= delta
  const Matrix& coefficient_map(std::size_t delta, std::size_t gamma, std::size_t p) const;

  // C^{p,q} = sum over q-faces of F^p; faces in id order
  GradedComplex cochains(std::size_t p) const;
  std::vector<std::size_t> cochain_offsets(std::size_t p, std::size_t q) const;
  std::vector<std::size_t> hodge_numbers(std::size_t p) const;  // h^{p,q}, q = 0..dim

 private:
  const FaceComplex* x_;
  mutable std::map<std::pair<std::size_t, std::size_t>, Matrix> spaces_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Matrix> maps_;
};

// Barycentric (order) complex with F^p coefficients at the top of each chain;
// carries the cup product and the fundamental class.
class OrderComplex {
 public:
  explicit OrderComplex(const TropicalComplex& t);
  std::size_t dim() const { return d_; }
  const std::vector<std::vector<std::size_t>>& chains(std::size_t q) const { return chains_.at(q); }
  GradedComplex cochains(std::size_t p) const;
  std::vector<std::size_t> offsets(std::size_t p, std::size_t q) const;
  // fundamental class on full flags, coordinates in F_d(top)
  const Vec& fundamental_class() const { return fund_; }
  bool fundamental_is_cycle() const;
  Vec cup(std::size_t p, std::size_t q, const Vec& a, std::size_t p2, std::size_t q2, const Vec& b) const;
  Rational evaluate(const Vec& top_cochain) const;  // against the fundamental class
  // O^{p,q} -> C^{p,q}, dual to barycentric subdivision
  Matrix to_cellular(std::size_t p, std::size_t q) const;

 private:
  const TropicalComplex* t_;
  std::size_t d_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> chains_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;
  Vec fund_;
};

// matrix of <a cup b, [X]> on cohomology representatives of
// H^{p,q} x H^{d-p,d-q} (order-complex model)
Matrix poincare_pairing(const OrderComplex& o, std::size_t p, std::size_t q);

}  // namespace trophodge
