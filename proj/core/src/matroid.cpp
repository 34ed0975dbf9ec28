#include "trophodge/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace trophodge {

Matroid::Matroid(std::size_t n, std::function<std::size_t(Mask)> r) : n_(n), rank_(std::move(r)) {
  if (n > kMaxGround) throw Error("too-large", "ground set larger than 20");
}

Matroid::Mask Matroid::mask(const Subset& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask(1) << i;
  return m;
}

Subset Matroid::members(Mask m) {
  Subset s;
  for (std::size_t i = 0; i < 32; ++i)
    if (m & (Mask(1) << i)) s.push_back(i);
  return s;
}

Matroid Matroid::uniform(std::size_t n, std::size_t r) {
  if (r > n) throw Error("schema", "uniform matroid needs r <= n");
  return Matroid(n, [r](Mask s) { return std::min<std::size_t>(std::popcount(s), r); });
}

Matroid Matroid::boolean(std::size_t n) {
  return Matroid(n, [](Mask s) { return static_cast<std::size_t>(std::popcount(s)); });
}

Matroid Matroid::graphic(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t nv = 0;
  for (auto& [u, v] : edges) nv = std::max({nv, u + 1, v + 1});
  auto e = edges;
  return Matroid(edges.size(), [e, nv](Mask s) {
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::size_t r = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!(s & (Mask(1) << i))) continue;
      auto a = find(e[i].first), b = find(e[i].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  });
}

Matroid Matroid::from_bases(std::size_t n, const std::vector<Subset>& bases) {
  if (bases.empty()) throw Error("schema", "matroid needs at least one basis");
  std::vector<Mask> b;
  for (auto& s : bases) {
    for (auto i : s)
      if (i >= n) throw Error("schema", "basis element out of range");
    b.push_back(mask(s));
  }
  for (auto& m : b)
    if (std::popcount(m) != std::popcount(b[0])) throw Error("schema", "bases of different sizes");
  return Matroid(n, [b](Mask s) {
    std::size_t r = 0;
    for (auto m : b) r = std::max<std::size_t>(r, std::popcount(m & s));
    return r;
  });
}

Matroid::Mask Matroid::closure(Mask s) const {
  std::size_t r = rank_(s);
  Mask c = s;
  for (std::size_t i = 0; i < n_; ++i)
    if (!(s & (Mask(1) << i)) && rank_(s | (Mask(1) << i)) == r) c |= Mask(1) << i;
  return c;
}

bool Matroid::is_simple() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rank_(Mask(1) << i) == 0) return false;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (rank_((Mask(1) << i) | (Mask(1) << j)) < 2) return false;
  }
  return true;
}

bool Matroid::check_axioms() const {
  if (n_ > 12) throw Error("too-large", "axiom check limited to 12 elements");
  if (rank_(0) != 0) return false;
  for (Mask s = 0; s <= full(); ++s) {
    std::size_t rs = rank_(s);
    for (std::size_t e = 0; e < n_; ++e) {
      Mask se = s | (Mask(1) << e);
      std::size_t re = rank_(se);
      if (re < rs || re > rs + 1) return false;
      for (std::size_t f = e + 1; f < n_; ++f) {
        Mask sf = s | (Mask(1) << f);
        if (re + rank_(sf) < rank_(se | sf) + rs) return false;
      }
    }
    if (s == full()) break;
  }
  return true;
}

std::vector<std::size_t> FlatLattice::proper() const {
  std::vector<std::size_t> out;
  std::size_t top = ranks.empty() ? 0 : ranks.back();
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (ranks[i] > 0 && ranks[i] < top) out.push_back(i);
  return out;
}

FlatLattice flats(const Matroid& m) {
  if (m.rank() > 1 && !m.is_simple()) throw Error("not-simple", "matroid has loops or parallel elements");
  std::set<Matroid::Mask> seen;
  std::vector<Matroid::Mask> queue{m.closure(0)};
  seen.insert(queue[0]);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (queue[k] & (Matroid::Mask(1) << e)) continue;
      auto f = m.closure(queue[k] | (Matroid::Mask(1) << e));
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  std::vector<std::pair<std::size_t, Subset>> sorted;
  for (auto f : seen) sorted.emplace_back(m.rank(f), Matroid::members(f));
  std::sort(sorted.begin(), sorted.end());
  FlatLattice lat;
  for (auto& [r, s] : sorted) {
    lat.ranks.push_back(r);
    lat.flats.push_back(s);
  }
  lat.covers.assign(lat.flats.size(), {});
  for (std::size_t i = 0; i < lat.flats.size(); ++i)
    for (std::size_t j = 0; j < lat.flats.size(); ++j)
      if (lat.ranks[j] == lat.ranks[i] + 1 &&
          std::includes(lat.flats[j].begin(), lat.flats[j].end(), lat.flats[i].begin(), lat.flats[i].end()))
        lat.covers[i].push_back(j);
  return lat;
}

Fan bergman_fan(const Matroid& m) {
  FlatLattice lat = flats(m);
  const std::size_t n = m.size();
  if (n == 0) throw Error("schema", "empty ground set");
  auto proper = lat.proper();
  std::vector<IVec> rays;
  for (auto i : proper) {
    IVec v(n - 1, Integer(0));
    auto& f = lat.flats[i];
    bool last = std::binary_search(f.begin(), f.end(), n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
      v[k] = (std::binary_search(f.begin(), f.end(), k) ? 1 : 0) - (last ? 1 : 0);
    rays.push_back(v);
  }
  // maximal flags by extending chains
  std::vector<Subset> chains;
  std::function<void(Subset&)> grow = [&](Subset& chain) {
    bool extended = false;
    for (std::size_t j = 0; j < proper.size(); ++j) {
      if (!chain.empty()) {
        auto& a = lat.flats[proper[chain.back()]];
        auto& b = lat.flats[proper[j]];
        if (b.size() <= a.size() || !std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      }
      chain.push_back(j);
      grow(chain);
      chain.pop_back();
      extended = true;
    }
    if (!extended) {
      Subset c = chain;
      std::sort(c.begin(), c.end());
      chains.push_back(c);
    }
  };
  Subset chain;
  grow(chain);
  return make_fan(n - 1, rays, chains);
}

}  // namespace trophodge
