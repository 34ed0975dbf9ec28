#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trophodge/polyhedral.hpp"
#include "trophodge/steenbrink.hpp"
#include "trophodge/trop_cohomology.hpp"

namespace trophodge {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

// d^2 = 0 on the cochain complexes and Euler characteristics
bool cochains_consistent(const TropicalComplex& t);
// order-complex Poincare pairing nondegenerate in every bidegree
bool poincare_nondegenerate(const TropicalComplex& t);
// d^2 = 0 and [N, d] = 0 on every row
bool page_identities(const SteenbrinkPage& st);
// symmetry and N, d skew-adjointness of psi on random homogeneous pairs
bool psi_identities(const SteenbrinkPage& st, std::uint64_t seed, int trials = 100);
// dim H^{q-p}(ST^{.,2p}) = h^{p,q}
bool steenbrink_comparison(const SteenbrinkPage& st, const TropicalComplex& t);
bool zigzag_pairings(const SteenbrinkPage& st, const TropicalComplex& t);
bool hodge_round_trip(const SteenbrinkPage& st);

// every invariant on one complex; exceptions become failed checks
std::vector<Check> check_all(const FaceComplex& x, std::uint64_t seed);

}  // namespace trophodge
