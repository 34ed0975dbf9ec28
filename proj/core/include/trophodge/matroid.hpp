#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trophodge/polyhedral.hpp"

namespace trophodge {

class Matroid {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxGround = 20;

  static Matroid uniform(std::size_t n, std::size_t r);
  static Matroid boolean(std::size_t n);
  static Matroid graphic(const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static Matroid from_bases(std::size_t n, const std::vector<Subset>& bases);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_(full()); }
  std::size_t rank(Mask s) const { return rank_(s); }
  std::size_t rank(const Subset& s) const { return rank_(mask(s)); }
  Mask closure(Mask s) const;
  Mask full() const { return n_ == 32 ? ~Mask(0) : ((Mask(1) << n_) - 1); }
  bool is_simple() const;
  // rank axioms over all subsets; only for |E| <= 12
  bool check_axioms() const;

  static Mask mask(const Subset& s);
  static Subset members(Mask m);

 private:
  Matroid(std::size_t n, std::function<std::size_t(Mask)> r);
  std::size_t n_ = 0;
  std::function<std::size_t(Mask)> rank_;
};

struct FlatLattice {
  std::vector<Subset> flats;        // sorted by rank, then lex
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::size_t>> covers;  // covers[i]: flats covering i
  std::vector<std::size_t> proper() const;      // indices of proper flats
};

FlatLattice flats(const Matroid& m);
Fan bergman_fan(const Matroid& m);

}  // namespace trophodge
