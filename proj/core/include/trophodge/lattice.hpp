#pragma once

#include <cstddef>
#include <vector>

#include "trophodge/exact_la.hpp"

namespace trophodge {

using IVec = std::vector<Integer>;
using Subset = std::vector<std::size_t>;

Integer gcd_of(const IVec& v);
IVec primitive(const IVec& v);  // throws on zero
Vec to_vec(const IVec& v);
IVec to_ivec(const Vec& v);     // throws "not-integral"
IVec image(const std::vector<IVec>& rows, const IVec& v);
Matrix to_matrix(const std::vector<IVec>& rows, std::size_t cols);

// row Hermite normal form of the lattice spanned by rows (zero rows dropped)
std::vector<IVec> hnf_rows(std::vector<IVec> rows);

// Unimodular V with V * G^T = [H; 0], G = gens as rows.
struct LatticeReduction {
  std::vector<IVec> V;
  std::vector<IVec> H;  // rank x k
  std::size_t rank = 0;
};
LatticeReduction reduce_generators(const std::vector<IVec>& gens, std::size_t n);

// gens independent and spanning a saturated sublattice
bool is_unimodular_set(const std::vector<IVec>& gens, std::size_t n);

// surjection Z^n -> Z^{n-r} whose kernel is the saturation of span(gens),
// rows in Hermite normal form
std::vector<IVec> complement_projection(const std::vector<IVec>& gens, std::size_t n);

// exterior algebra in coordinates: k-subsets of {0..m-1} in lex order
const std::vector<Subset>& subsets(std::size_t m, std::size_t k);
std::size_t binom(std::size_t m, std::size_t k);
std::size_t subset_index(std::size_t m, const Subset& s);
Vec wedge(const std::vector<Vec>& vs, std::size_t m);
Vec wedge_forms(const Vec& a, std::size_t p, const Vec& b, std::size_t q, std::size_t m);
// Lambda^k of a linear map given as a matrix (rows x cols)
Matrix exterior_power(const Matrix& q, std::size_t k);

}  // namespace trophodge
