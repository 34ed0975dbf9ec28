#include "oracles.hpp"

#include <map>

namespace oracle {

namespace {

void multisets(std::size_t nr, std::size_t p, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = start; r < nr; ++r) {
    cur.push_back(r);
    multisets(nr, p, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::size_t> chow_dims(const trophodge::Fan& f) {
  const std::size_t nr = f.rays.size();
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= f.dim() + 1; ++p) {
    std::vector<std::vector<std::size_t>> monos, lower;
    std::vector<std::size_t> cur;
    multisets(nr, p, 0, cur, monos);
    if (p > 0) multisets(nr, p - 1, 0, cur, lower);
    std::map<std::vector<std::size_t>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    std::vector<Vec> rel;
    for (auto& m : monos) {
      std::vector<std::size_t> s(m.begin(), m.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (!f.find(s)) {
        Vec v(monos.size(), Rational(0));
        v[idx[m]] = 1;
        rel.push_back(v);
      }
    }
    for (auto& b : lower)
      for (std::size_t i = 0; i < f.n; ++i) {
        Vec v(monos.size(), Rational(0));
        for (std::size_t r = 0; r < nr; ++r) {
          auto m = b;
          m.push_back(r);
          std::sort(m.begin(), m.end());
          v[idx[m]] += Rational(f.rays[r][i]);
        }
        rel.push_back(v);
      }
    dims.push_back(monos.size() - rank(rel));
  }
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  return dims;
}

}  // namespace oracle
