#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trophodge/polyhedral.hpp"

namespace trophodge {

// sorted multiset of ray indices
using Monomial = std::vector<std::size_t>;

// A^*(fan) = Q[x_rho] / (I1 + I2), degree by degree.
class ChowRing {
 public:
  explicit ChowRing(Fan f);

  const Fan& fan() const { return fan_; }
  std::size_t top() const { return d_; }
  std::size_t dim(std::size_t p) const { return p <= d_ ? basis_[p].size() : 0; }
  std::vector<std::size_t> dims() const;
  // basis of A^p: cone indices, read as squarefree monomials x_sigma
  const std::vector<std::size_t>& basis(std::size_t p) const { return basis_.at(p); }
  std::string label(std::size_t p, std::size_t i) const;

  Vec normal_form(const Monomial& m) const;
  Vec cone_class(std::size_t cone) const;
  Vec product(std::size_t p, const Vec& a, std::size_t q, const Vec& b) const;
  Vec unit() const { return Vec{Rational(1)}; }
  // needs dim A^top = 1 and all maximal cones equal there
  Rational degree(const Vec& c) const;
  Rational pairing(std::size_t p, const Vec& a, const Vec& b) const;
  bool has_degree_map() const { return degree_ok_; }

 private:
  Fan fan_;
  std::size_t d_ = 0;
  std::vector<std::vector<Monomial>> monos_;
  std::vector<std::map<Monomial, std::size_t>> index_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<Matrix> nf_;
  bool degree_ok_ = false;
};

// image of generators under restriction to the star of ray rho;
// ray_map[r] = ray of the target star fan, or none if r, rho span no cone
Matrix restriction_matrix(const ChowRing& src, const ChowRing& dst, std::size_t rho,
                          const std::vector<std::optional<std::size_t>>& ray_map, std::size_t k,
                          const Vec& m);
// checks independence of the choice of m; throws restriction-ambiguous
Matrix restriction_matrix(const ChowRing& src, const ChowRing& dst, std::size_t rho,
                          const std::vector<std::optional<std::size_t>>& ray_map, std::size_t k);
// cone_map[c]: cone of src (star of rho) -> cone of dst containing rho
Matrix gysin_matrix(const ChowRing& src, const ChowRing& dst, const std::vector<std::size_t>& cone_map,
                    std::size_t k);

// Minkowski weights as coordinate vectors over cones (faces) of dim k
Subspace minkowski_weights(const Fan& f, std::size_t k);
// over open faces of dimension k, in the order of open_k_faces
std::vector<std::size_t> open_k_faces(const FaceComplex& x, std::size_t k);
Subspace minkowski_weights(const FaceComplex& x, std::size_t k);
bool is_balanced(const Fan& f, std::size_t k, const Vec& w);
bool is_balanced(const FaceComplex& x, std::size_t k, const Vec& w);

// <a, w> = sum of a_sigma w(sigma), a over basis(p), w over cones_of_dim(p)
Rational evaluate(const ChowRing& r, std::size_t p, const Vec& a, const Vec& w);

struct ChowMwDuality {
  Matrix evaluation;  // A^p x MW_p
  Matrix poincare;    // A^p -> MW_{d-p}, in a MW basis
  bool evaluation_invertible = false;
  bool poincare_invertible = false;
};
ChowMwDuality chow_mw_duality(const ChowRing& r, std::size_t p);

// star fans and Chow rings of faces of a compactified complex, cached
class LocalChow {
 public:
  explicit LocalChow(const FaceComplex& x) : x_(&x) {}
  const FaceComplex& complex() const { return *x_; }
  const StarFan& star(std::size_t f) const;
  const ChowRing& ring(std::size_t f) const;
  // A^k(star gamma) -> A^k(star delta), gamma < delta codim 1, same sed
  const Matrix& restriction(std::size_t gamma, std::size_t delta, std::size_t k) const;
  // A^k(star delta) -> A^{k+1}(star gamma)
  const Matrix& gysin(std::size_t gamma, std::size_t delta, std::size_t k) const;
  std::string monomial_label(std::size_t f, std::size_t p, std::size_t i) const;

 private:
  struct Entry {
    StarFan star;
    std::unique_ptr<ChowRing> ring;
  };
  const Entry& entry(std::size_t f) const;
  const FaceComplex* x_;
  mutable std::map<std::size_t, Entry> cache_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Matrix> res_, gys_;
};

}  // namespace trophodge
