#pragma once
// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <random>
#include <vector>

#include "trophodge/exact_la.hpp"
#include "trophodge/polyhedral.hpp"

namespace oracle {

using trophodge::Rational;
using trophodge::Vec;

// textbook Gaussian elimination on rows, no shortcuts
inline std::size_t rank(std::vector<Vec> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<Vec> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3,
                                    int hi = 3, double zero = 0.4) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution z(zero);
  std::vector<Vec> m(r, Vec(c, Rational(0)));
  for (auto& row : m)
    for (auto& x : row)
      if (!z(rng)) {
        x = Rational(val(rng), den(rng));
        x.canonicalize();
      }
  return m;
}

// dim of degree-p part of Q[x_rays]/(I1 + I2) using every monomial
std::vector<std::size_t> chow_dims(const trophodge::Fan& f);

}  // namespace oracle
