#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "trophodge/steenbrink.hpp"
#include "trophodge/trop_cohomology.hpp"

namespace trophodge {

// cocycle of K^{0,2p}: alpha_v in A^p(star v) per finite vertex, over the Chow basis
struct HodgeClass {
  int p = 0;
  std::map<std::size_t, Vec> vertices;
};

// Minkowski weight on the open (d-p)-faces, in open_k_faces order
struct TropicalCycle {
  int p = 0;  // codimension
  std::size_t k = 0;
  std::vector<std::size_t> faces;
  Vec weights;
};

// K^{0,2p} coordinates <-> HodgeClass
Vec to_kernel_vector(const SteenbrinkPage& st, const HodgeClass& a);
HodgeClass from_kernel_vector(const SteenbrinkPage& st, int p, const Vec& v);
HodgeClass zero_class(const SteenbrinkPage& st, int p);
bool is_compatible(const SteenbrinkPage& st, const HodgeClass& a);

// cocycles of K^{0,2p} whose classes form a basis of ker N on H^0(ST^{.,2p}); throws hl-failure
std::vector<HodgeClass> hodge_locus_basis(const SteenbrinkPage& st, int p);

// throws incompatible-class, gluing-conflict
TropicalCycle hodge_to_cycle(const SteenbrinkPage& st, const HodgeClass& a);

// sum_v deg(alpha_v beta_v)
Rational degree_pairing(const SteenbrinkPage& st, const HodgeClass& a, const HodgeClass& b);
// sum_v sum_eta w(eta) b_{v,eta}, b over the cone-class basis of A^{d-p}(star v)
Rational weight_pairing(const SteenbrinkPage& st, const HodgeClass& b, const TropicalCycle& c);
bool verify_class(const SteenbrinkPage& st, const HodgeClass& a, const TropicalCycle& c);

// zigzag from K^{0,2p} to a cocycle of C^{p,p}; `alternate` makes every solve
// pick a different particular solution. throws not-primitive, zigzag-inconsistent
Vec zigzag_representative(const SteenbrinkPage& st, const TropicalComplex& t, const HodgeClass& a,
                          bool alternate = false);
// <alpha, w> with w in MW_p(Y) over open_k_faces(x, p)
Rational steenbrink_mw_pairing(const SteenbrinkPage& st, const HodgeClass& a, const Vec& w);
// <c, w> = sum over open p-faces of w(eta) c_eta(n_eta)
Rational cochain_mw_pairing(const TropicalComplex& t, std::size_t p, const Vec& c, const Vec& w);

struct NumericalReport {
  int p = 0, q = 0;
  Matrix pairing;  // hodge_locus_basis(p) x hodge_locus_basis(q), by degree
  bool nondegenerate = false;
  bool ker_perp_im = false;  // both orthogonality relations
  bool decomposition = false;  // H^{p,p} = ker N + Im N and H^{q,q} likewise
  bool ok() const { return nondegenerate && ker_perp_im && decomposition; }
};
// throws degenerate-kernel-pairing
NumericalReport numerical_vs_homological(const SteenbrinkPage& st, int p);

}  // namespace trophodge
