#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trophodge/graded_complex.hpp"
#include "trophodge/steenbrink.hpp"

namespace trophodge {

// L(k): C^k -> D^{k+2}, a chain map C -> D[2]
struct LefschetzTriple {
  GradedComplex c, d;
  ChainMap l;
};

struct Junction {
  std::string label;
  std::size_t dim = 0;         // dimension of the middle space
  std::size_t image_rank = 0;  // rank of the incoming map
  std::size_t kernel_dim = 0;  // dim ker of the outgoing map
  bool exact = false;
};

struct ExactnessReport {
  std::vector<Junction> junctions;
  bool lift_independent = true;  // d^0 recomputed from a second lift agrees
  bool ok() const;
};

// degrees where L is checked: complex and cohomology level
bool hl_around_zero(const LefschetzTriple& t, bool on_cohomology);

// K = ker L and R = coker L with induced differentials, plus the maps to C and from D
struct KernelCokernel {
  GradedComplex k, r;
  ChainMap incl;  // K^j -> C^j
  ChainMap proj;  // D^j -> R^j
  ChainMap lift;  // R^j -> D^j, a section of proj
};
KernelCokernel kernel_cokernel(const LefschetzTriple& t);

// d^0 : H^0(R) -> H^0(K) by the diagram chase; `shift` (C^{-2} coordinates)
// perturbs the lift c by L(shift) to test independence. throws chase-failure
Matrix connecting_map(const LefschetzTriple& t, const KernelCokernel& kc, const Vec* shift = nullptr);

// both long exact sequences, junction by junction. throws hl-failure
ExactnessReport clemens_schmid_sequences(const LefschetzTriple& t, std::uint64_t seed = 1);

// random triple satisfying HL on complexes and cohomology
LefschetzTriple random_triple(std::uint64_t seed, std::size_t max_dim = 6);

struct ConeReport {
  int b = 0;
  std::map<int, std::size_t> cone;  // H(Cone(N : ST^{.,b+2} -> ST^{.,b}[2]))
  std::map<int, std::size_t> t;     // H(T)
  std::map<int, std::size_t> r;     // H(R^{.,b})
  bool t_complex = false;
  bool quasi_iso = false;
  bool ok() const { return t_complex && quasi_iso; }
};
// b even
ConeReport mapping_cone_check(const SteenbrinkPage& st, int b);
// the double cone T and the projection T -> R^{.,b}
GradedComplex double_cone(const SteenbrinkPage& st, int b);
ChainMap double_cone_projection(const SteenbrinkPage& st, int b);

// (ST^{.,2p+2}, ST^{.,2p}, N)
LefschetzTriple steenbrink_triple(const SteenbrinkPage& st, int p);
ExactnessReport tropical_clemens_schmid(const SteenbrinkPage& st);

}  // namespace trophodge
