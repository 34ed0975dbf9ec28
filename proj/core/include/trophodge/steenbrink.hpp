#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "trophodge/chow.hpp"
#include "trophodge/graded_complex.hpp"
#include "trophodge/polyhedral.hpp"

namespace trophodge {

// ST_1^{a,b,s}: sum over finite faces delta of dim s of A^k(star delta), k = (a+b-s)/2
struct StBlock {
  int a = 0, b = 0, s = 0;
  std::size_t k = 0;
  std::vector<std::size_t> faces;
  std::vector<std::size_t> offsets;  // of each face inside the block
  std::size_t dim = 0;
};

// element of ST_1^{a,b}, coordinates over the row basis (blocks by increasing s)
struct StElement {
  int a = 0, b = 0;
  Vec v;
};

class SteenbrinkPage {
 public:
  // throws star-fan-not-Bergman
  explicit SteenbrinkPage(const FaceComplex& x);

  const FaceComplex& complex() const { return *x_; }
  const LocalChow& local() const { return local_; }
  std::size_t dim() const { return d_; }
  const std::vector<std::size_t>& finite_faces() const { return finite_; }
  bool empty() const { return finite_.empty(); }

  bool has_block(int a, int b, int s) const { return blocks_.count({a, b, s}) > 0; }
  const StBlock& block(int a, int b, int s) const;
  std::vector<const StBlock*> blocks() const;
  // blocks of ST^{a,b} by increasing s
  std::vector<const StBlock*> row_blocks(int a, int b) const;
  std::size_t dim(int a, int b) const;
  std::size_t offset(int a, int b, int s) const;

  // ST^{a,b} -> ST^{a+1,b}
  Matrix istar(int a, int b) const;
  Matrix gysin(int a, int b) const;
  Matrix d(int a, int b) const { return istar(a, b) + gysin(a, b); }
  // ST^{a,b} -> ST^{a+2,b-2}
  Matrix monodromy(int a, int b) const;
  // N^k : ST^{a,b} -> ST^{a+2k,b-2k}
  Matrix monodromy_power(int a, int b, int k) const;

  // (ST^{.,b}, d) with degrees a
  GradedComplex row(int b) const;
  // dims of H^a(ST^{.,b}) for a = -d..d (all zero for odd b)
  std::map<int, std::size_t> row_cohomology(int b) const;

  // Gram matrix of psi on ST^{a,b} x ST^{-a,2d-b}
  Matrix psi_matrix(int a, int b) const;
  Rational psi(const StElement& x, const StElement& y) const;
  static int epsilon(int a, int b);

  // kernel complex K^{a,b} = ST^{a,b,a} with i*, cokernel complex R^{a,b} = ST^{a,b,-a} with Gys
  GradedComplex kernel_complex(int b) const;
  GradedComplex cokernel_complex(int b) const;
  // inclusion K^{a,b} -> ST^{a,b}, projection ST^{a,b} -> R^{a,b}
  Matrix kernel_inclusion(int a, int b) const;
  Matrix cokernel_projection(int a, int b) const;

 private:
  const FaceComplex* x_;
  LocalChow local_;
  std::size_t d_ = 0;
  std::vector<std::size_t> finite_;
  std::map<std::tuple<int, int, int>, StBlock> blocks_;
  std::map<std::size_t, std::size_t> face_pos_;  // face -> index in its block
};

// surviving and relative cohomology dims: H^{q-p}(K^{.,2p}), H^{q-p}(R^{.,2p})
std::pair<std::size_t, std::size_t> surviving_relative(const SteenbrinkPage& st, int p, int q);

struct PrimitiveParts {
  // P^{-a,b} for a >= 0
  std::map<std::pair<int, int>, std::size_t> dims;
  bool decomposition = true;  // dim H^{-a}(b) = sum_s dim P^{-a-2s,b+2s}
  bool orthogonal = true;     // distinct summands psi(., N^a .)-orthogonal
};
// throws hl-failure
PrimitiveParts primitive_parts(const SteenbrinkPage& st);

struct HlEntry {
  int k = 0;
  int b = 0;  // source row; the map is N^k : (-k, b) -> (k, b - 2k)
  bool page = false;
  bool cohomology = false;
};
struct HlReport {
  std::vector<HlEntry> entries;
  bool ok() const;
};
HlReport verify_hl(const SteenbrinkPage& st);

// matrix of N^k on cohomology H^a(b) -> H^{a+2k}(b-2k), in the Cohomology bases
Matrix cohomology_monodromy(const SteenbrinkPage& st, int a, int b, int k);
// psi(x, N^a y) on H^{-a}(b) x H^{-a}(2d-b+2a), in the Cohomology bases
Matrix cohomology_pairing(const SteenbrinkPage& st, int a, int b);

}  // namespace trophodge
